#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chowlef/element.hpp"
#include "chowlef/models.hpp"
#include "chowlef/presentation.hpp"

namespace chowlef {

namespace detail {

inline Monomial widen(const Monomial& m) {
    std::vector<int> e = m.exps();
    e.push_back(0);
    return Monomial(std::move(e));
}

}  // namespace detail

/// Adjoins the relative hyperplane class xi of P(F) over `base`, with the
/// Grothendieck relation xi^(r+1) = -(c_1 xi^r + ... + c_{r+1}). The base
/// ring keeps all of its relations, and its own truncation survives as a
/// degree bound once the ambient dimension grows by r.
inline PresPtr projective_bundle(const PresPtr& base, const std::vector<RingElement>& chern,
                                 int r, const std::string& gen_name = "xi",
                                 std::optional<std::string> id = std::nullopt) {
    // r = 0 (a rank-1 bundle, xi = c_1) is allowed; it adds no dimension.
    if (r < 0) throw std::invalid_argument("projective_bundle: negative fiber dimension");
    if (chern.size() != static_cast<std::size_t>(r) + 1)
        throw std::invalid_argument("projective_bundle: need c_1..c_{r+1}");
    for (std::size_t i = 0; i < chern.size(); ++i) {
        if (chern[i].presentation().get() != base.get())
            throw std::invalid_argument("projective_bundle: chern class not in the base ring");
        if (!chern[i].is_zero() && chern[i].codim() != std::optional<int>(static_cast<int>(i) + 1))
            throw std::invalid_argument("projective_bundle: c_" + std::to_string(i + 1) +
                                        " is not homogeneous of codimension " + std::to_string(i + 1));
    }

    PresentationData d;
    d.id = id ? *id : "bundle(" + base->id() + ",r=" + std::to_string(r) + ")";
    d.generators = base->generators();
    d.generators.push_back({gen_name, 1, 2, Parity::even});
    if (base->find_generator(gen_name))
        throw std::invalid_argument("projective_bundle: generator name '" + gen_name +
                                    "' already used by the base");
    const std::size_t xi = d.generators.size() - 1;
    d.truncation_dim = base->truncation_dim() + r;

    for (const RewriteRule& rule : base->rules()) {
        RewriteRule widened{rule.gen, rule.power, {}};
        for (const auto& [m, c] : rule.rhs) widened.rhs.emplace_back(detail::widen(m), c);
        d.rules.push_back(std::move(widened));
    }
    for (const DegreeBound& b : base->extra_bounds()) {
        DegreeBound nb = b;
        nb.weights.push_back(0);
        d.extra_bounds.push_back(std::move(nb));
    }
    DegreeBound base_bound;  // classes from the base still vanish above its dimension
    base_bound.weights.assign(d.generators.size(), 0);
    for (std::size_t i = 0; i + 1 < d.generators.size(); ++i)
        base_bound.weights[i] = d.generators[i].codim;
    base_bound.cap = base->truncation_dim();
    d.extra_bounds.push_back(std::move(base_bound));

    RewriteRule gro{xi, r + 1, {}};
    for (int i = 1; i <= r + 1; ++i) {
        for (const auto& [m, c] : chern[static_cast<std::size_t>(i - 1)].terms()) {
            Monomial widened = detail::widen(m);
            widened.exp(xi) = r + 1 - i;
            gro.rhs.emplace_back(std::move(widened), -c);
        }
    }
    d.rules.push_back(std::move(gro));
    return build_presentation(std::move(d));
}

/// X x P^m as the trivial bundle P(O^(m+1)): adjoins t with t^(m+1) = 0.
inline PresPtr product_with_projective_space(const PresPtr& base, int m,
                                             const std::string& gen_name = "t") {
    if (m < 1) throw std::invalid_argument("product_with_projective_space: m must be >= 1");
    std::vector<RingElement> chern(static_cast<std::size_t>(m) + 1, RingElement::zero(base));
    return projective_bundle(base, chern, m, gen_name,
                             "product(" + base->id() + ",P^" + std::to_string(m) + ")");
}

/// Structural comparison of presentations under a generator renaming:
/// same generator data in the same order, same truncations and bounds, and
/// the same rewrite rules with identical right sides.
inline bool presentations_match(const RingPresentation& a, const RingPresentation& b,
                                const std::map<std::string, std::string>& rename = {}) {
    auto renamed = [&](const std::string& n) {
        auto it = rename.find(n);
        return it == rename.end() ? n : it->second;
    };
    if (a.generator_count() != b.generator_count()) return false;
    if (a.truncation_dim() != b.truncation_dim()) return false;
    for (std::size_t i = 0; i < a.generator_count(); ++i) {
        const GeneratorSpec &ga = a.generator(i), &gb = b.generator(i);
        if (renamed(ga.name) != gb.name || ga.codim != gb.codim || ga.kweight != gb.kweight ||
            ga.parity != gb.parity)
            return false;
    }
    auto bound_set = [](const RingPresentation& p) {
        std::vector<std::pair<std::vector<int>, int>> v;
        for (const DegreeBound& b : p.extra_bounds()) v.emplace_back(b.weights, b.cap);
        std::sort(v.begin(), v.end());
        return v;
    };
    if (bound_set(a) != bound_set(b)) return false;

    auto rule_map = [](const RingPresentation& p) {
        std::map<std::pair<std::size_t, int>, std::map<Monomial, Rational>> rules;
        for (const RewriteRule& r : p.rules()) {
            auto& rhs = rules[{r.gen, r.power}];
            for (const auto& [m, c] : r.rhs) {
                rhs[m] += c;
                if (rhs[m] == 0) rhs.erase(m);
            }
        }
        return rules;
    };
    return rule_map(a) == rule_map(b);
}

/// Model wrappers: the presentation grows, declared hom generators carry
/// over (the new fiber class is not homologically trivial), and the
/// cycle-class map is dropped since the cohomology target no longer matches.
inline Model bundle_model(const Model& base, const std::vector<RingElement>& chern, int r,
                          const std::string& gen_name = "xi") {
    Model out;
    out.kind = base.kind;
    out.g = base.g;
    out.pres = projective_bundle(base.pres, chern, r, gen_name,
                                 "bundle(" + base.id + ",r=" + std::to_string(r) + ")");
    out.id = out.pres->id();
    out.hom_declared = base.hom_declared;
    out.hom_gens = base.hom_gens;
    if (base.ample) {
        RingElement carried = transport(*base.ample, out.pres);
        out.ample = carried + RingElement::generator(out.pres, out.pres->generator_count() - 1);
    }
    return out;
}

inline Model product_model(const Model& base, int m, const std::string& gen_name = "t") {
    std::vector<RingElement> chern(static_cast<std::size_t>(m) + 1, RingElement::zero(base.pres));
    Model out;
    out.kind = base.kind;
    out.g = base.g;
    out.pres = projective_bundle(base.pres, chern, m, gen_name,
                                 "product(" + base.id + ",P^" + std::to_string(m) + ")");
    out.id = out.pres->id();
    out.hom_declared = base.hom_declared;
    out.hom_gens = base.hom_gens;
    if (base.ample) {
        RingElement carried = transport(*base.ample, out.pres);
        out.ample = carried + RingElement::generator(out.pres, out.pres->generator_count() - 1);
    }
    return out;
}

}  // namespace chowlef
