#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "chowlef/rational.hpp"

namespace chowlef {

/// Dense matrix of exact rationals, row major. Sizes in this library stay
/// small (a few hundred on the largest cohomology sweep), so dense storage
/// and cubic elimination are the right tool.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    bool operator==(const Matrix& o) const = default;

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("Matrix::operator*: shape mismatch");
        Matrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rational& a = at(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
            }
        return r;
    }

    std::vector<Rational> apply(const std::vector<Rational>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: size mismatch");
        std::vector<Rational> r(rows_, Rational(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (at(i, j) != 0) r[i] += at(i, j) * v[j];
        return r;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> entries_;
};

struct RankKernel {
    std::size_t rank = 0;
    // Kernel vectors in reduced echelon normalization: vector k has entry 1 at
    // its free column and 0 at every other free column, so the output is
    // reproducible byte for byte.
    std::vector<std::vector<Rational>> kernel_basis;
};

/// Exact rank and nullspace via Gauss-Jordan. rank + kernel size == cols.
inline RankKernel rank_and_kernel(const Matrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    Matrix a = m;
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t sel = row;
        while (sel < rows && a.at(sel, col) == 0) ++sel;
        if (sel == rows) continue;
        if (sel != row)
            for (std::size_t j = col; j < cols; ++j) std::swap(a.at(row, j), a.at(sel, j));
        Rational inv = Rational(1) / a.at(row, col);
        for (std::size_t j = col; j < cols; ++j) a.at(row, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || a.at(i, col) == 0) continue;
            Rational f = a.at(i, col);
            for (std::size_t j = col; j < cols; ++j) a.at(i, j) -= f * a.at(row, j);
        }
        pivot_col.push_back(col);
        ++row;
    }

    RankKernel out;
    out.rank = pivot_col.size();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -a.at(r, free);
        out.kernel_basis.push_back(std::move(v));
    }
    return out;
}

inline std::size_t rank(const Matrix& m) { return rank_and_kernel(m).rank; }

/// Exact determinant. Denominators are cleared per row, then the integer
/// matrix goes through Bareiss fraction-free elimination so intermediate
/// entries stay the size of minors.
inline Rational determinant(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;

    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    Rational scale = 1;  // det(m) = det(a) / scale
    for (std::size_t i = 0; i < n; ++i) {
        Integer lcm = 1;
        for (std::size_t j = 0; j < n; ++j) {
            Integer d = denominator(m.at(i, j));
            lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
        }
        scale *= lcm;
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& q = m.at(i, j);
            a[i][j] = numerator(q) * (lcm / denominator(q));
        }
    }

    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t sel = k + 1;
            while (sel < n && a[sel][k] == 0) ++sel;
            if (sel == n) return 0;
            std::swap(a[k], a[sel]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return Rational(sign * a[n - 1][n - 1]) / scale;
}

}  // namespace chowlef
