#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "chowlef/linear_map.hpp"
#include "chowlef/models.hpp"
#include "chowlef/report.hpp"
#include "chowlef/sympow.hpp"

namespace chowlef {

/// Wraps a symmetric-product ring as a checkable model. In theta mode the
/// ring is tautological, so its declared hom part is zero.
inline Model sympow_model(const SymPowRing& r) {
    Model m;
    m.kind = ModelKind::sympow;
    m.g = r.g;
    m.pres = r.pres;
    m.id = r.pres->id();
    m.hom_declared = r.mode == SymPowMode::theta;
    m.ample = r.z_elem();
    return m;
}

namespace detail {

inline void require_codim1(const Model& model, const RingElement& D, const char* op) {
    if (D.presentation().get() != model.pres.get())
        throw std::invalid_argument(std::string(op) + ": divisor not in the model's ring");
    if (D.codim() != std::optional<int>(1))
        throw std::invalid_argument(std::string(op) + ": divisor must be homogeneous of codim 1");
}

}  // namespace detail

/// Conjecture-1 check: multiplication by D^(n-2p) out of CH^p is injective.
inline LefschetzReport check_conj1(const Model& model, const RingElement& D, int p) {
    detail::require_codim1(model, D, "check_conj1");
    const int n = model.pres->truncation_dim();
    if (p < 0 || n < 2 * p)
        throw std::invalid_argument("check_conj1: hypothesis violated (need n >= 2p >= 0)");
    LefschetzReport rep = multiplication_injectivity_report(PresRing(model.pres), D, p, n - 2 * p,
                                                            "conj1", D.str());
    rep.model_id = model.id;
    return rep;
}

/// Conjecture-2 check: multiplication by D^(n-2p+1) restricted to the
/// declared homologically trivial part of CH^p is injective. The hom part is
/// the span of basis monomials with positive degree in the model's hom
/// generators (the declared kernel of the cycle-class map).
inline LefschetzReport check_conj2(const Model& model, const RingElement& D, int p) {
    if (!model.hom_declared)
        throw std::invalid_argument("check_conj2: model declares no cycle-class kernel");
    detail::require_codim1(model, D, "check_conj2");
    const int n = model.pres->truncation_dim();
    if (p < 0 || n < 2 * p - 1)
        throw std::invalid_argument("check_conj2: hypothesis violated (need n >= 2p-1 >= -1)");

    detail::Stopwatch timer;
    LefschetzReport rep;
    rep.check = "conj2";
    rep.model_id = model.id;
    rep.p = p;
    rep.exponent = n - 2 * p + 1;
    rep.divisor = D.str();

    std::vector<Monomial> hom_basis;
    if (p <= n)
        for (const Monomial& m : model.pres->graded_basis(p)) {
            int hom_degree = 0;
            for (std::size_t gi : model.hom_gens) hom_degree += m.exp(gi);
            if (hom_degree > 0) hom_basis.push_back(m);
        }
    rep.domain_dim = hom_basis.size();

    const int q = p + rep.exponent;
    if (hom_basis.empty()) {
        rep.codomain_dim = (q >= 0 && q <= n) ? model.pres->graded_basis(q).size() : 0;
        rep.rank = 0;
        rep.verdict = Verdict::injective;  // vacuous
        rep.elapsed_ms = timer.ms();
        return rep;
    }

    RingElement power = D.pow(rep.exponent);
    std::vector<Monomial> codomain = model.pres->graded_basis(q);
    rep.codomain_dim = codomain.size();
    Matrix mat(codomain.size(), hom_basis.size());
    for (std::size_t j = 0; j < hom_basis.size(); ++j) {
        RingElement img = power * RingElement::monomial(model.pres, hom_basis[j]);
        auto col = expand_in_basis(img, codomain);
        for (std::size_t i = 0; i < col.size(); ++i) mat.at(i, j) = std::move(col[i]);
    }
    RankKernel rk = rank_and_kernel(mat);
    rep.rank = rk.rank;
    rep.verdict = rk.rank == rep.domain_dim ? Verdict::injective : Verdict::not_injective;
    for (const auto& v : rk.kernel_basis) {
        RingElement e = RingElement::zero(model.pres);
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0) e = e + RingElement::monomial(model.pres, hom_basis[j], v[j]);
        rep.kernel_basis.push_back(e.str());
    }
    rep.elapsed_ms = timer.ms();
    return rep;
}

/// Cohomological Hard Lefschetz on the exterior model: cupping with
/// omega^(g-k) maps H^k isomorphically onto H^(2g-k). Degrees above the
/// middle are checked through the same pair read from the low side.
inline IsoReport check_hl_cohomology(const Model& model, int k) {
    if (model.kind != ModelKind::cohomology)
        throw std::invalid_argument("check_hl_cohomology: cohomology model required");
    const int g = model.g;
    if (k < 0 || k > 2 * g)
        throw std::invalid_argument("check_hl_cohomology: degree out of range 0..2g");
    const int low = k <= g ? k : 2 * g - k;
    RingElement omega = cohomology_omega(model.pres);
    IsoReport rep = multiplication_injectivity_report(PresRing(model.pres), omega, low, g - low,
                                                      "hl", "omega", /*as_iso=*/true,
                                                      /*divisor_codim=*/2);
    rep.model_id = model.id;
    rep.p = k;
    return rep;
}

/// Kuennemann's motivic Hard Lefschetz on the divisor model: multiplication
/// by D0^(g+s-2p) is a bijection between the s-graded slices of CH^p and
/// CH^(g+s-p). Slices are the monomials of fixed D1-degree s.
inline IsoReport check_kunnemann(const Model& model, int p, int s) {
    if (model.kind != ModelKind::divisor)
        throw std::invalid_argument("check_kunnemann: divisor model required");
    const int g = model.g;
    if (2 * p - s < 0 || 2 * p - s > g)
        throw std::invalid_argument("check_kunnemann: need 0 <= 2p-s <= g");

    detail::Stopwatch timer;
    IsoReport rep;
    rep.check = "kunnemann";
    rep.model_id = model.id;
    rep.p = p;
    rep.s = s;
    rep.exponent = g + s - 2 * p;
    rep.divisor = "D0";

    auto slice = [&](int codim) {
        std::vector<Monomial> out;
        if (codim < 0 || codim > g) return out;
        for (const Monomial& m : model.pres->graded_basis(codim))
            if (m.exp(1) == s) out.push_back(m);
        return out;
    };
    std::vector<Monomial> domain = slice(p);
    std::vector<Monomial> codomain = slice(g + s - p);
    rep.domain_dim = domain.size();
    rep.codomain_dim = codomain.size();

    RingElement power = RingElement::generator(model.pres, 0).pow(rep.exponent);
    Matrix mat(codomain.size(), domain.size());
    for (std::size_t j = 0; j < domain.size(); ++j) {
        RingElement img = power * RingElement::monomial(model.pres, domain[j]);
        for (const auto& [m, c] : img.terms()) {
            bool placed = false;
            for (std::size_t i = 0; i < codomain.size(); ++i)
                if (codomain[i] == m) {
                    mat.at(i, j) = c;
                    placed = true;
                }
            if (!placed) throw std::logic_error("check_kunnemann: image leaves the s-slice");
        }
    }
    RankKernel rk = rank_and_kernel(mat);
    rep.rank = rk.rank;
    rep.surjective = rk.rank == rep.codomain_dim;
    rep.verdict = (rk.rank == rep.domain_dim && *rep.surjective) ? Verdict::iso : Verdict::not_iso;
    for (const auto& v : rk.kernel_basis) {
        RingElement e = RingElement::zero(model.pres);
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0) e = e + RingElement::monomial(model.pres, domain[j], v[j]);
        rep.kernel_basis.push_back(e.str());
    }
    rep.elapsed_ms = timer.ms();
    return rep;
}

/// Triangular-descent mechanism on the divisor model: with bases ordered by
/// s, the matrix of .(D0+D1)^(g-2p) is block lower triangular, its diagonal
/// blocks are the matrices of .D0^(g-2p) on each s-slice, and diagonal
/// injectivity forces full injectivity (verified by an independent rank
/// computation).
inline TriangularDescentReport check_triangular_descent(const Model& model, int p) {
    if (model.kind != ModelKind::divisor)
        throw std::invalid_argument("check_triangular_descent: divisor model required");
    const int g = model.g;
    if (p < 0 || g < 2 * p)
        throw std::invalid_argument("check_triangular_descent: need g >= 2p >= 0");

    detail::Stopwatch timer;
    TriangularDescentReport rep;
    rep.model_id = model.id;
    rep.p = p;
    rep.exponent = g - 2 * p;

    const RingElement D0 = RingElement::generator(model.pres, 0);
    const RingElement D1 = RingElement::generator(model.pres, 1);
    RingElement full_power = (D0 + D1).pow(rep.exponent);
    RingElement diag_power = D0.pow(rep.exponent);

    // graded_basis lists D0^a D1^b by descending D0-degree, i.e. ascending s.
    std::vector<Monomial> domain = model.pres->graded_basis(p);
    std::vector<Monomial> codomain = model.pres->graded_basis(g - p);
    auto s_of = [](const Monomial& m) { return m.exp(1); };
    rep.block_count = domain.size();

    Matrix full(codomain.size(), domain.size());
    for (std::size_t j = 0; j < domain.size(); ++j) {
        auto col = expand_in_basis(full_power * RingElement::monomial(model.pres, domain[j]), codomain);
        for (std::size_t i = 0; i < col.size(); ++i) full.at(i, j) = std::move(col[i]);
    }

    rep.block_triangular = true;
    for (std::size_t j = 0; j < domain.size(); ++j)
        for (std::size_t i = 0; i < codomain.size(); ++i)
            if (full.at(i, j) != 0 && s_of(codomain[i]) < s_of(domain[j]))
                rep.block_triangular = false;

    rep.diagonal_blocks_match = true;
    rep.diagonal_injective = true;
    for (int s = 0; s <= p; ++s) {
        std::vector<std::size_t> dom_idx, cod_idx;
        for (std::size_t j = 0; j < domain.size(); ++j)
            if (s_of(domain[j]) == s) dom_idx.push_back(j);
        for (std::size_t i = 0; i < codomain.size(); ++i)
            if (s_of(codomain[i]) == s) cod_idx.push_back(i);
        if (dom_idx.empty()) continue;

        Matrix block(cod_idx.size(), dom_idx.size());
        for (std::size_t j = 0; j < dom_idx.size(); ++j) {
            auto col = expand_in_basis(
                diag_power * RingElement::monomial(model.pres, domain[dom_idx[j]]), codomain);
            for (std::size_t i = 0; i < cod_idx.size(); ++i) block.at(i, j) = col[cod_idx[i]];
            for (std::size_t i = 0; i < cod_idx.size(); ++i)
                if (!(full.at(cod_idx[i], dom_idx[j]) == block.at(i, j)))
                    rep.diagonal_blocks_match = false;
        }
        if (rank(block) != dom_idx.size()) rep.diagonal_injective = false;
    }

    rep.full_injective = rank(full) == domain.size();
    rep.elapsed_ms = timer.ms();
    return rep;
}

}  // namespace chowlef
