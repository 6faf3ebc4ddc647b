#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chowlef/element.hpp"
#include "chowlef/linear_map.hpp"
#include "chowlef/matrix.hpp"
#include "chowlef/presentation.hpp"
#include "chowlef/report.hpp"
#include "chowlef/ring_hom.hpp"

namespace chowlef {

enum class SymPowMode { formal, theta };

inline std::string to_string(SymPowMode m) { return m == SymPowMode::formal ? "formal" : "theta"; }

/// CH(C^(2g-1)) presented as CH(J)[z] modulo the minimal equation
/// z^g + v_1 z^(g-1) + ... + v_g = 0. In formal mode the coefficient ring is
/// Q[v_1..v_g] truncated above codimension g; in theta mode v_k specializes
/// to (-1)^k theta^k / k!.
struct SymPowRing {
    int g = 0;
    SymPowMode mode = SymPowMode::formal;
    PresPtr pres;
    PresPtr free_cover;  // same generators, no relations: holds unreduced polynomials
    std::size_t z = 0;   // index of z in both presentations

    RingElement z_elem() const { return RingElement::generator(pres, z); }
    RingElement reduce(const RingElement& raw_in_cover) const { return transport(raw_in_cover, pres); }
};

inline Rational theta_v_coefficient(int k) {
    // v_k specialization (-1)^k / k! as the scalar in front of theta^k
    Rational c = Rational(1) / Rational(factorial(k));
    return (k % 2 == 0) ? c : -c;
}

inline SymPowRing sympow_ring(int g, SymPowMode mode) {
    if (g < 1) throw std::invalid_argument("sympow_ring: genus must be >= 1");
    SymPowRing r;
    r.g = g;
    r.mode = mode;

    PresentationData d;
    d.id = "sympow:g=" + std::to_string(g) + ",mode=" + to_string(mode);
    if (mode == SymPowMode::theta) {
        d.generators.push_back({"theta", 1, 2, Parity::even});
    } else {
        for (int k = 1; k <= g; ++k)
            d.generators.push_back({"v" + std::to_string(k), k, 2 * k, Parity::even});
    }
    const std::size_t coeff_gens = d.generators.size();
    d.generators.push_back({"z", 1, 2, Parity::even});
    r.z = coeff_gens;
    d.truncation_dim = 2 * g - 1;

    // CH(J) vanishes above codimension g.
    DegreeBound coeff_bound;
    coeff_bound.weights.assign(coeff_gens + 1, 0);
    for (std::size_t i = 0; i < coeff_gens; ++i) coeff_bound.weights[i] = d.generators[i].codim;
    coeff_bound.cap = g;
    d.extra_bounds.push_back(coeff_bound);

    // z^g -> -(v_1 z^(g-1) + ... + v_g)
    RewriteRule rule;
    rule.gen = r.z;
    rule.power = g;
    for (int k = 1; k <= g; ++k) {
        Monomial m(coeff_gens + 1);
        Rational c;
        if (mode == SymPowMode::theta) {
            m.exp(0) = k;
            c = -theta_v_coefficient(k);
        } else {
            m.exp(k - 1) = 1;
            c = -1;
        }
        m.exp(r.z) = g - k;
        rule.rhs.emplace_back(std::move(m), std::move(c));
    }
    d.rules.push_back(std::move(rule));

    PresentationData free_d;
    free_d.id = d.id + ",cover";
    free_d.generators = d.generators;
    free_d.truncation_dim = d.truncation_dim;
    r.free_cover = build_presentation(std::move(free_d));
    r.pres = build_presentation(std::move(d));
    return r;
}

/// The minimal equation sum_{k=0}^g v_k z^(g-k) as an unreduced polynomial in
/// the free cover; reducing it in the ring gives zero.
inline RingElement minimal_equation(const SymPowRing& r) {
    RawTerms raw;
    const std::size_t n = r.free_cover->generator_count();
    for (int k = 0; k <= r.g; ++k) {
        Monomial m(n);
        Rational c(1);
        if (k > 0) {
            if (r.mode == SymPowMode::theta) {
                m.exp(0) = k;
                c = theta_v_coefficient(k);
            } else {
                m.exp(k - 1) = 1;
            }
        }
        m.exp(r.z) = r.g - k;
        raw.emplace_back(std::move(m), std::move(c));
    }
    return RingElement::from_raw(r.free_cover, std::move(raw));
}

/// Pushforward along i_n : C^(n) -> C^(2g-1). A class written as
/// sum_j a_j z_n^(e_j) with a_j in CH(J) goes to sum_j a_j z^(2g-1-n+e_j).
inline RingElement i_pushforward(const SymPowRing& r, int n,
                                 const std::vector<std::pair<RingElement, int>>& x) {
    if (n < 1 || n > 2 * r.g - 1)
        throw std::invalid_argument("i_pushforward: n out of range 1..2g-1");
    RingElement out = RingElement::zero(r.pres);
    for (const auto& [a, e] : x) {
        if (a.presentation().get() != r.pres.get())
            throw std::invalid_argument("i_pushforward: coefficient not in the sympow ring");
        for (const auto& [m, c] : a.terms())
            if (m.exp(r.z) > 0)
                throw std::invalid_argument("i_pushforward: coefficient must lie in CH(J)");
        if (e < 0 || e > n)
            throw std::invalid_argument("i_pushforward: z_n exponent out of range 0..n");
        out = out + a * r.z_elem().pow(2 * r.g - 1 - n + e);
    }
    return out;
}

/// Injectivity side of the stability criterion: phi_n^* is injective exactly
/// when multiplication by z^(2g-n) is injective out of CH^p(C^(2g-1)), since
/// (i_n)_*(alpha z_n) = (sum_j a_j z^(p-j)) z^(2g-n) on the model.
inline LefschetzReport strong_stability_check(int g, int n, int p) {
    if (g < 1) throw std::invalid_argument("strong_stability_check: genus must be >= 1");
    if (n < 2 * p + 1)
        throw std::invalid_argument("strong_stability_check: stability needs n >= 2p+1");
    if (n > 2 * g - 1) throw std::invalid_argument("strong_stability_check: n exceeds 2g-1");
    if (p < 0) throw std::invalid_argument("strong_stability_check: negative codimension");
    SymPowRing r = sympow_ring(g, SymPowMode::theta);
    LefschetzReport rep = multiplication_injectivity_report(PresRing(r.pres), r.z_elem(), p,
                                                            2 * g - n, "stability", "z");
    rep.s = std::nullopt;
    return rep;
}

/// Report of one symbolic linear-system extraction: the relations that must
/// vanish (in the a_i) and the solved expressions for y_{k+1}..y_p.
struct SystemReport {
    int g = 0, p = 0, k = 0;
    PresPtr ring;  // Q[v_1..v_g, a_1..a_k, y_{k+1}..y_p] with CH(J) truncation
    std::vector<RingElement> equations_a;
    std::vector<std::pair<int, RingElement>> expressions_y;  // (index m, rhs) meaning y_m = rhs
    std::vector<std::string> substitution_trail;             // a_i in terms of y, v
    bool matches_closed_form = false;  // equations re-derived as a_1 v_{p+m-1} + ... rows
};

namespace detail {

inline PresPtr extract_target_ring(int g, int p, int k) {
    // a's first so the rows print in the paper's order (a1 v_m + a2 v_{m-1} + ...)
    PresentationData d;
    d.id = "sympow-system:g=" + std::to_string(g) + ",p=" + std::to_string(p);
    for (int i = 1; i <= k; ++i) d.generators.push_back({"a" + std::to_string(i), i, 2 * i, Parity::even});
    for (int i = 1; i <= g; ++i) d.generators.push_back({"v" + std::to_string(i), i, 2 * i, Parity::even});
    for (int i = k + 1; i <= p; ++i)
        d.generators.push_back({"y" + std::to_string(i), i, 2 * i, Parity::even});
    d.generators.push_back({"z", 1, 2, Parity::even});
    d.truncation_dim = 2 * g;
    DegreeBound bound;  // everything except z lives in CH(J)
    bound.weights.assign(d.generators.size(), 0);
    for (std::size_t i = 0; i + 1 < d.generators.size(); ++i) bound.weights[i] = d.generators[i].codim;
    bound.cap = g;
    d.extra_bounds.push_back(bound);
    RewriteRule rule;
    rule.gen = d.generators.size() - 1;
    rule.power = g;
    for (int j = 1; j <= g; ++j) {
        Monomial m(d.generators.size());
        m.exp(static_cast<std::size_t>(k + j - 1)) = 1;  // v_j
        m.exp(rule.gen) = g - j;
        rule.rhs.emplace_back(std::move(m), Rational(-1));
    }
    d.rules.push_back(std::move(rule));
    return build_presentation(std::move(d));
}

}  // namespace detail

/// Reduces (sum_i y_i z^(p-i)) z^(2g-2p-1) with formal linear y's, collects
/// the z-coefficients that survive the CH(J) truncation, substitutes
/// a_1 = y_1, a_i = y_i - sum_{j<i} a_j v_{i-j}, and splits the rows into the
/// vanishing system (in the a's) and solved expressions for y_{k+1}..y_p.
inline SystemReport extract_system(int g, int p) {
    if (g < 1 || p < 0 || 2 * g - 1 < 2 * p + 1)
        throw std::invalid_argument("extract_system: need 2g-1 >= 2p+1");
    const int k = g - p - 1;
    if (k > p) throw std::invalid_argument("extract_system: k = g-p-1 > p is outside the paper's case split");
    if (k < 1) throw std::invalid_argument("extract_system: k = g-p-1 must be >= 1");

    SystemReport rep;
    rep.g = g;
    rep.p = p;
    rep.k = k;

    // Source ring carries y_1..y_p; reduction happens here.
    PresentationData sd;
    sd.id = "sympow-system-src";
    for (int i = 1; i <= g; ++i) sd.generators.push_back({"v" + std::to_string(i), i, 2 * i, Parity::even});
    for (int i = 1; i <= p; ++i) sd.generators.push_back({"y" + std::to_string(i), i, 2 * i, Parity::even});
    sd.generators.push_back({"z", 1, 2, Parity::even});
    const std::size_t src_z = sd.generators.size() - 1;
    sd.truncation_dim = 2 * g;
    DegreeBound bound;
    bound.weights.assign(sd.generators.size(), 0);
    for (std::size_t i = 0; i + 1 < sd.generators.size(); ++i) bound.weights[i] = sd.generators[i].codim;
    bound.cap = g;
    sd.extra_bounds.push_back(bound);
    RewriteRule rule;
    rule.gen = src_z;
    rule.power = g;
    for (int j = 1; j <= g; ++j) {
        Monomial m(sd.generators.size());
        m.exp(j - 1) = 1;
        m.exp(src_z) = g - j;
        rule.rhs.emplace_back(std::move(m), Rational(-1));
    }
    sd.rules.push_back(std::move(rule));
    PresPtr src = build_presentation(std::move(sd));

    // (sum_{i=1}^p y_i z^(p-i)) * z^(2g-2p-1); y_0 = 0 after Hard Lefschetz.
    RawTerms raw;
    for (int i = 1; i <= p; ++i) {
        Monomial m(src->generator_count());
        m.exp(g + i - 1) = 1;          // y_i
        m.exp(src_z) = g + k - i;      // z^(p-i) * z^(2g-2p-1)
        raw.emplace_back(std::move(m), Rational(1));
    }
    RingElement reduced = RingElement::from_raw(src, std::move(raw));

    rep.ring = detail::extract_target_ring(g, p, k);
    auto a_gen = [&](int i) { return RingElement::generator(rep.ring, static_cast<std::size_t>(i - 1)); };
    auto v_gen = [&](int i) { return RingElement::generator(rep.ring, static_cast<std::size_t>(k + i - 1)); };
    auto y_index = [&](int m) { return static_cast<std::size_t>(g + m - 1); };

    // Substitution y_i -> a_i + sum_{j<i} a_j v_{i-j} for i <= k; the trail
    // records the inverse direction the paper displays.
    std::vector<RingElement> images;
    for (int i = 1; i <= g; ++i) images.push_back(v_gen(i));
    for (int i = 1; i <= p; ++i) {
        if (i <= k) {
            RingElement img = a_gen(i);
            std::string trail = "a" + std::to_string(i) + " = y" + std::to_string(i);
            for (int j = 1; j < i; ++j) {
                img = img + a_gen(j) * v_gen(i - j);
                trail += " - a" + std::to_string(j) + "*v" + std::to_string(i - j);
            }
            images.push_back(img);
            rep.substitution_trail.push_back(std::move(trail));
        } else {
            images.push_back(RingElement::generator(rep.ring, y_index(i)));  // y_i kept
        }
    }
    images.push_back(RingElement::generator(rep.ring, rep.ring->generator_count() - 1));  // z
    RingElement substituted = apply_hom(reduced, rep.ring, images);

    const std::size_t tgt_z = rep.ring->generator_count() - 1;
    // Collect z-coefficients, highest power first.
    for (int zdeg = g - 1; zdeg >= 0; --zdeg) {
        RawTerms coeff;
        for (const auto& [m, c] : substituted.terms()) {
            if (m.exp(tgt_z) != zdeg) continue;
            Monomial stripped = m;
            stripped.exp(tgt_z) = 0;
            coeff.emplace_back(std::move(stripped), c);
        }
        RingElement row = RingElement::from_raw(rep.ring, std::move(coeff));
        if (row.is_zero()) continue;

        // Guard: rows are linear in the a's and y's.
        for (const auto& [m, c] : row.terms()) {
            int linear = 0;
            for (int i = 1; i <= k; ++i) linear += m.exp(static_cast<std::size_t>(i - 1));
            for (int i = k + 1; i <= p; ++i) linear += m.exp(y_index(i));
            if (linear > 1) throw std::logic_error("extract_system: row is not linear in a, y");
        }

        // A row containing y_m (m > k) is solved for it; others must vanish.
        std::optional<std::size_t> ygen;
        Rational ycoeff;
        for (const auto& [m, c] : row.terms()) {
            for (int i = k + 1; i <= p; ++i) {
                std::size_t gi = y_index(i);
                if (m.exp(gi) == 1 && m.total_degree() == 1) {
                    ygen = gi;
                    ycoeff = c;
                }
            }
        }
        if (ygen) {
            RingElement rest = row - RingElement::generator(rep.ring, *ygen) * ycoeff;
            RingElement solved = rest * (Rational(-1) / ycoeff);
            int index = static_cast<int>(*ygen - g + 1);
            rep.expressions_y.emplace_back(index, std::move(solved));
        } else {
            if (row.terms().begin()->second < 0) row = -row;  // normalize sign
            rep.equations_a.push_back(std::move(row));
        }
    }

    // Cross-check against the displayed row pattern:
    // equations: sum_i a_i v_{p+m-i} = 0 for m = 1..k+1,
    // expressions: y_{k+j} = sum_i a_i v_{k+j-i} for j = 1..p-k.
    auto closed_row = [&](int first_v) {
        RingElement e = RingElement::zero(rep.ring);
        for (int i = 1; i <= k; ++i) {
            int vi = first_v - (i - 1);
            if (vi < 1 || vi > g) continue;
            e = e + a_gen(i) * v_gen(vi);
        }
        return e;
    };
    bool match = rep.equations_a.size() == static_cast<std::size_t>(k + 1) &&
                 rep.expressions_y.size() == static_cast<std::size_t>(p - k);
    if (match)
        for (int m = 1; m <= k + 1; ++m)
            if (!(rep.equations_a[static_cast<std::size_t>(m - 1)] == closed_row(p + m - 1))) match = false;
    if (match)
        for (int j = 1; j <= p - k; ++j) {
            const auto& [idx, expr] = rep.expressions_y[static_cast<std::size_t>(j - 1)];
            if (idx != k + j || !(expr == closed_row(k + j - 1))) match = false;
        }
    rep.matches_closed_form = match;
    return rep;
}

/// The k x k coefficient matrix of the Lemma-pbig linear system, entry
/// (j,i) = (-1)^(i-1) / (g-k+j-i)! for 1 <= i,j <= k with k = g-p-1.
inline Matrix pbig_matrix(int g, int p) {
    if (2 * p + 1 < g) throw std::invalid_argument("pbig_matrix: hypothesis 2p+1 >= g fails");
    const int k = g - p - 1;
    if (k < 1) throw std::invalid_argument("pbig_matrix: k = g-p-1 must be >= 1");
    Matrix m(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
    for (int j = 1; j <= k; ++j)
        for (int i = 1; i <= k; ++i) {
            Rational e = Rational(1) / Rational(factorial(g - k + j - i));
            m.at(j - 1, i - 1) = (i % 2 == 1) ? e : -e;
        }
    return m;
}

inline Rational pbig_det(int g, int p) { return determinant(pbig_matrix(g, p)); }

}  // namespace chowlef
