#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "chowlef/element.hpp"
#include "chowlef/matrix.hpp"
#include "chowlef/presentation.hpp"

namespace chowlef {

/// Matrix of a multiplication operator between two graded pieces, with the
/// exact bases it is written in.
struct LinearMapMatrix {
    std::vector<Monomial> domain_basis;
    std::vector<Monomial> codomain_basis;
    Matrix matrix;
};

inline std::vector<Rational> expand_in_basis(const RingElement& x,
                                             const std::vector<Monomial>& basis) {
    std::map<Monomial, std::size_t, MonoGreater> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
    std::vector<Rational> coords(basis.size(), Rational(0));
    for (const auto& [m, c] : x.terms()) {
        auto it = index.find(m);
        if (it == index.end())
            throw std::invalid_argument("expand_in_basis: element does not lie in the span");
        coords[it->second] = c;
    }
    return coords;
}

/// Column j is normal_form(c * basis[j]) expanded in the codomain basis.
inline LinearMapMatrix mult_operator_matrix(const PresPtr& pres, const RingElement& c, int p) {
    if (c.presentation().get() != pres.get())
        throw std::invalid_argument("mult_operator_matrix: element from another presentation");
    if (!c.is_homogeneous())
        throw std::invalid_argument("mult_operator_matrix: multiplier is not homogeneous");
    const int d = c.is_zero() ? 0 : *c.codim();
    if (p < 0 || p > pres->truncation_dim() || p + d > pres->truncation_dim())
        throw std::invalid_argument("mult_operator_matrix: codimension out of range");

    LinearMapMatrix out;
    out.domain_basis = pres->graded_basis(p);
    out.codomain_basis = pres->graded_basis(p + d);
    out.matrix = Matrix(out.codomain_basis.size(), out.domain_basis.size());
    for (std::size_t j = 0; j < out.domain_basis.size(); ++j) {
        RingElement img = c * RingElement::monomial(pres, out.domain_basis[j]);
        std::vector<Rational> col = expand_in_basis(img, out.codomain_basis);
        for (std::size_t i = 0; i < col.size(); ++i) out.matrix.at(i, j) = std::move(col[i]);
    }
    return out;
}

/// Uniform graded-ring view over a presentation, so checkers can be written
/// once for presentation rings and blow-up rings alike.
class PresRing {
public:
    using Element = RingElement;

    explicit PresRing(PresPtr pres) : pres_(std::move(pres)) {}

    const PresPtr& presentation() const { return pres_; }
    std::string id() const { return pres_->id(); }
    int dimension() const { return pres_->truncation_dim(); }

    std::vector<Element> basis_elements(int p) const {
        std::vector<Element> out;
        for (const Monomial& m : pres_->graded_basis(p))
            out.push_back(RingElement::monomial(pres_, m));
        return out;
    }

    std::vector<Rational> coordinates(const Element& x, int p) const {
        return expand_in_basis(x, pres_->graded_basis(p));
    }

    Element multiply(const Element& a, const Element& b) const { return a * b; }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element scale(const Element& a, const Rational& c) const { return a * c; }
    std::string str(const Element& x) const { return x.str(); }

private:
    PresPtr pres_;
};

}  // namespace chowlef
