#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chowlef/element.hpp"
#include "chowlef/presentation.hpp"
#include "chowlef/ring_hom.hpp"

namespace chowlef {

enum class ModelKind { theta, divisor, cohomology, curve, sympow, custom };

inline std::string to_string(ModelKind k) {
    switch (k) {
        case ModelKind::theta: return "theta";
        case ModelKind::divisor: return "divisor";
        case ModelKind::cohomology: return "cohomology";
        case ModelKind::curve: return "curve";
        case ModelKind::sympow: return "sympow";
        case ModelKind::custom: return "custom";
    }
    return "?";
}

/// A finite model of (part of) CH(A) or H*(A): a presentation together with
/// the k-action data carried by its generators, the declared homologically
/// trivial generators, and, when available, the cycle-class map into the
/// matching exterior-algebra cohomology model.
struct Model {
    ModelKind kind = ModelKind::custom;
    int g = 0;
    PresPtr pres;
    std::string id;

    bool hom_declared = false;
    std::vector<std::size_t> hom_gens;

    PresPtr cohomology;                  // cl target, when the model has one
    std::vector<RingElement> cl_images;  // per generator of pres

    std::optional<RingElement> ample;

    bool has_cycle_class() const { return cohomology != nullptr; }
};

/// Symplectic class omega = sum e_{2i-1} e_{2i} of the exterior model.
inline RingElement cohomology_omega(const PresPtr& cohomology_pres) {
    const std::size_t n = cohomology_pres->generator_count();
    if (n % 2 != 0) throw std::invalid_argument("cohomology_omega: odd generator count");
    RawTerms raw;
    for (std::size_t i = 0; i + 1 < n; i += 2) {
        Monomial m(n);
        m.exp(i) = 1;
        m.exp(i + 1) = 1;
        raw.emplace_back(std::move(m), Rational(1));
    }
    return RingElement::from_raw(cohomology_pres, std::move(raw));
}

inline PresPtr cohomology_presentation(int g) {
    PresentationData d;
    d.id = "cohomology:g=" + std::to_string(g);
    for (int i = 1; i <= 2 * g; ++i)
        d.generators.push_back({"e" + std::to_string(i), 1, 1, Parity::odd});
    d.truncation_dim = 2 * g;  // graded by cohomological degree
    return build_presentation(std::move(d));
}

inline Model build_model(ModelKind kind, int g) {
    if (g < 1) throw std::invalid_argument("build_model: dimension must be >= 1");
    Model m;
    m.kind = kind;
    m.g = g;
    switch (kind) {
        case ModelKind::theta: {
            PresentationData d;
            d.id = "theta:g=" + std::to_string(g);
            d.generators.push_back({"theta", 1, 2, Parity::even});
            d.truncation_dim = g;
            m.pres = build_presentation(std::move(d));
            m.id = m.pres->id();
            m.hom_declared = true;  // hom part is zero on the theta model
            m.cohomology = cohomology_presentation(g);
            m.cl_images = {cohomology_omega(m.cohomology)};
            m.ample = RingElement::generator(m.pres, 0);
            return m;
        }
        case ModelKind::divisor: {
            PresentationData d;
            d.id = "divisor:g=" + std::to_string(g);
            d.generators.push_back({"D0", 1, 2, Parity::even});
            d.generators.push_back({"D1", 1, 1, Parity::even});
            d.truncation_dim = g;
            m.pres = build_presentation(std::move(d));
            m.id = m.pres->id();
            m.hom_declared = true;
            m.hom_gens = {1};
            m.cohomology = cohomology_presentation(g);
            m.cl_images = {cohomology_omega(m.cohomology), RingElement::zero(m.cohomology)};
            m.ample = RingElement::generator(m.pres, 0) + RingElement::generator(m.pres, 1);
            return m;
        }
        case ModelKind::cohomology: {
            m.pres = cohomology_presentation(g);
            m.id = m.pres->id();
            return m;
        }
        default:
            throw std::invalid_argument("build_model: kind must be theta, divisor or cohomology");
    }
}

/// Minimal curve base for projective bundles: a point class pt with pt^2 = 0
/// (by truncation at dim 1) and hom_dim formal Pic^0 directions V1..Vm with
/// all products vanishing.
inline Model curve_model(int hom_dim) {
    if (hom_dim < 0) throw std::invalid_argument("curve_model: negative hom dimension");
    Model m;
    m.kind = ModelKind::curve;
    m.g = 1;
    PresentationData d;
    d.id = "curve:hom=" + std::to_string(hom_dim);
    d.generators.push_back({"pt", 1, 2, Parity::even});
    for (int i = 1; i <= hom_dim; ++i)
        d.generators.push_back({"V" + std::to_string(i), 1, 1, Parity::even});
    d.truncation_dim = 1;
    m.pres = build_presentation(std::move(d));
    m.id = m.pres->id();
    m.hom_declared = true;
    for (int i = 1; i <= hom_dim; ++i) m.hom_gens.push_back(static_cast<std::size_t>(i));
    m.ample = RingElement::generator(m.pres, 0);
    return m;
}

/// Q[H]/(H^(n+1)) with its hyperplane class; hom part is zero.
inline Model projective_space_model(int n) {
    if (n < 1) throw std::invalid_argument("projective_space_model: dimension must be >= 1");
    Model m;
    m.kind = ModelKind::custom;
    m.g = n;
    PresentationData d;
    d.id = "P^" + std::to_string(n);
    d.generators.push_back({"H", 1, 2, Parity::even});
    d.truncation_dim = n;
    m.pres = build_presentation(std::move(d));
    m.id = m.pres->id();
    m.hom_declared = true;
    m.ample = RingElement::generator(m.pres, 0);
    return m;
}

/// Pullback along multiplication by k: each monomial scales by k^w where w is
/// the sum of its generators' k-weights.
inline RingElement kstar_apply(const RingElement& x, int k) {
    const RingPresentation& pres = *x.presentation();
    RawTerms raw;
    for (const auto& [mono, c] : x.terms()) {
        int w = pres.kweight(mono);
        Integer scale = int_pow(Integer(k), w);
        if (scale != 0) raw.emplace_back(mono, c * Rational(scale));
    }
    return RingElement::from_raw(x.presentation(), std::move(raw));
}

/// Beauville projector onto the index-s eigenspace, realized as Lagrange
/// interpolation in the k=2 pullback over the finite range s in [p-g, p].
/// The output is cross-checked to be a k=3 eigenvector before returning.
inline RingElement beauville_project(const Model& model, const RingElement& x, int s) {
    if (x.presentation().get() != model.pres.get())
        throw std::invalid_argument("beauville_project: element not in the model's ring");
    if (x.is_zero()) return x;
    if (!x.is_homogeneous())
        throw std::invalid_argument("beauville_project: element must be codim-homogeneous");
    const int p = *x.codim();
    if (s < p - model.g || s > p) return RingElement::zero(model.pres);

    RingElement y = x;
    Rational denom = 1;
    const Rational eig_s = rational_pow(Rational(2), 2 * p - s);
    for (int t = p - model.g; t <= p; ++t) {
        if (t == s) continue;
        Rational eig_t = rational_pow(Rational(2), 2 * p - t);
        y = kstar_apply(y, 2) - y * eig_t;
        denom *= eig_s - eig_t;
    }
    y = y * (Rational(1) / denom);

    if (!(kstar_apply(y, 3) == y * rational_pow(Rational(3), 2 * p - s)))
        throw std::logic_error("beauville_project: component is not a k=3 eigenvector");
    return y;
}

namespace detail {
inline std::size_t require_theta(const Model& m, const char* op) {
    if (m.kind != ModelKind::theta)
        throw std::invalid_argument(std::string(op) + ": theta model required");
    return *m.pres->find_generator("theta");
}
}  // namespace detail

/// Fourier transform on the theta model, normalized by
/// F(theta^b / b!) = (-1)^(g-b) theta^(g-b) / (g-b)!, so F o F = (-1)^g and
/// Pontryagin powers of theta^(g-1)/(g-1)! come out with positive sign.
inline RingElement fourier(const Model& model, const RingElement& x) {
    const std::size_t t = detail::require_theta(model, "fourier");
    const int g = model.g;
    RawTerms raw;
    for (const auto& [mono, c] : x.terms()) {
        const int b = mono.exp(t);
        Monomial img(mono.width());
        img.exp(t) = g - b;
        int sign = ((g - b) % 2 == 0) ? 1 : -1;
        Rational scale = Rational(factorial(b) * sign) / Rational(factorial(g - b));
        raw.emplace_back(std::move(img), c * scale);
    }
    return RingElement::from_raw(model.pres, std::move(raw));
}

/// Pontryagin convolution x*y = (-1)^g F(F(x).F(y)) on the theta model. The
/// identity element is the point class theta^g/g!.
inline RingElement pontryagin(const Model& model, const RingElement& x, const RingElement& y) {
    detail::require_theta(model, "pontryagin");
    RingElement conv = fourier(model, fourier(model, x) * fourier(model, y));
    return (model.g % 2 == 0) ? conv : -conv;
}

/// Tautological classes on the theta model: w_k = theta^k/k! and its
/// translated-and-inverted partner v_k = (-1)^k theta^k/k!.
inline std::pair<RingElement, RingElement> w_and_v_classes(const Model& model, int k) {
    const std::size_t t = detail::require_theta(model, "w_and_v_classes");
    if (k < 0 || k > model.g) throw std::invalid_argument("w_and_v_classes: k out of range");
    Monomial m(model.pres->generator_count());
    m.exp(t) = k;
    RingElement w = RingElement::monomial(model.pres, m, Rational(1) / Rational(factorial(k)));
    RingElement v = (k % 2 == 0) ? w : -w;
    return {w, v};
}

/// Cycle-class map into the model's exterior cohomology ring (a ring
/// homomorphism; theta and D0 go to omega, D1 to zero).
inline RingElement cycle_class(const RingElement& x, const Model& model) {
    if (!model.has_cycle_class())
        throw std::invalid_argument("cycle_class: model has no cycle-class map");
    if (x.presentation().get() != model.pres.get())
        throw std::invalid_argument("cycle_class: element not in the model's ring");
    return apply_hom(x, model.cohomology, model.cl_images);
}

}  // namespace chowlef
