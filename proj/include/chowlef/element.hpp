#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chowlef/presentation.hpp"
#include "chowlef/rational.hpp"

namespace chowlef {

using TermMap = std::map<Monomial, Rational, MonoGreater>;

namespace detail {

/// Product of two monomials with the Koszul sign. Returns nullopt when a
/// shared odd generator would square to zero.
inline std::optional<std::pair<Monomial, int>> mono_mul(const RingPresentation& pres,
                                                        const Monomial& a, const Monomial& b) {
    const std::size_t n = pres.generator_count();
    Monomial r(n);
    // swaps = #{(i,j) : i > j, a_i odd, b_j odd}; each transposes one odd pair.
    long swaps = 0;
    long odd_tail_of_a = 0;  // odd exponents of a at index > j, built backwards
    for (std::size_t idx = n; idx-- > 0;) {
        bool odd = pres.generator(idx).parity == Parity::odd;
        if (odd && b.exp(idx) > 0) {
            if (a.exp(idx) > 0) return std::nullopt;
            swaps += odd_tail_of_a;
        }
        if (odd && a.exp(idx) > 0) ++odd_tail_of_a;
        r.exp(idx) = a.exp(idx) + b.exp(idx);
    }
    return std::make_pair(std::move(r), (swaps % 2 == 0) ? 1 : -1);
}

/// Rewrites raw terms to normal form: truncation and degree bounds drop
/// monomials, odd squares vanish, and each ruled generator power >= its rule
/// power is replaced by the rule's right side. Terminates because a rewrite
/// never increases exponents of later generators and strictly lowers the
/// ruled one.
inline TermMap reduce_terms(const RingPresentation& pres, RawTerms work) {
    TermMap out;
    while (!work.empty()) {
        auto [m, c] = std::move(work.back());
        work.pop_back();
        if (c == 0) continue;
        if (pres.exceeds_bounds(m)) continue;

        std::size_t ruled = pres.generator_count();
        bool dead = false;
        for (std::size_t i = 0; i < pres.generator_count(); ++i) {
            if (pres.generator(i).parity == Parity::odd && m.exp(i) > 1) {
                dead = true;
                break;
            }
            const RewriteRule* r = pres.rule_for(i);
            if (r && m.exp(i) >= r->power) {
                ruled = i;
                break;
            }
        }
        if (dead) continue;
        if (ruled == pres.generator_count()) {
            Rational& slot = out[m];
            slot += c;
            if (slot == 0) out.erase(m);
            continue;
        }

        const RewriteRule* r = pres.rule_for(ruled);
        Monomial rest = m;
        rest.exp(ruled) -= r->power;
        for (const auto& [rm, rc] : r->rhs) {
            auto prod = mono_mul(pres, rest, rm);
            if (!prod) continue;
            work.emplace_back(std::move(prod->first), c * rc * prod->second);
        }
    }
    return out;
}

}  // namespace detail

inline std::string format_terms(const RingPresentation& pres, const TermMap& terms) {
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms) {
        bool neg = c < 0;
        Rational a = neg ? Rational(-c) : c;
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        if (m.is_one())
            s += to_string(a);
        else if (a == 1)
            s += pres.monomial_str(m);
        else
            s += to_string(a) + "*" + pres.monomial_str(m);
    }
    return s;
}

inline std::string format_raw_terms(const RingPresentation& pres, const RawTerms& raw) {
    TermMap collected;
    for (const auto& [m, c] : raw) {
        Rational& slot = collected[m];
        slot += c;
        if (slot == 0) collected.erase(m);
    }
    return format_terms(pres, collected);
}

/// Sparse rational combination of normal-form monomials of one presentation.
/// Always stored fully reduced; the zero element has an empty term map.
class RingElement {
public:
    RingElement() = default;

    static RingElement zero(PresPtr pres) { return RingElement(std::move(pres), TermMap{}); }

    static RingElement one(PresPtr pres) {
        Monomial m(pres->generator_count());
        return from_raw(std::move(pres), {{m, Rational(1)}});
    }

    static RingElement generator(PresPtr pres, std::size_t i) {
        if (i >= pres->generator_count()) throw std::invalid_argument("generator index out of range");
        Monomial m(pres->generator_count());
        m.exp(i) = 1;
        return from_raw(std::move(pres), {{m, Rational(1)}});
    }

    static RingElement monomial(PresPtr pres, Monomial m, Rational c = Rational(1)) {
        return from_raw(std::move(pres), {{std::move(m), std::move(c)}});
    }

    static RingElement from_raw(PresPtr pres, RawTerms raw) {
        TermMap t = detail::reduce_terms(*pres, std::move(raw));
        return RingElement(std::move(pres), std::move(t));
    }

    const PresPtr& presentation() const { return pres_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_homogeneous() const {
        std::optional<int> c;
        for (const auto& [m, coef] : terms_) {
            int mc = pres_->codim(m);
            if (c && *c != mc) return false;
            c = mc;
        }
        return true;
    }

    /// Codimension of a nonzero homogeneous element.
    std::optional<int> codim() const {
        if (!is_homogeneous() || terms_.empty()) return std::nullopt;
        return pres_->codim(terms_.begin()->first);
    }

    RingElement component(int p) const {
        TermMap t;
        for (const auto& [m, c] : terms_)
            if (pres_->codim(m) == p) t.emplace(m, c);
        return RingElement(pres_, std::move(t));
    }

    RingElement operator-() const {
        TermMap t = terms_;
        for (auto& [m, c] : t) c = -c;
        return RingElement(pres_, std::move(t));
    }

    RingElement operator+(const RingElement& o) const {
        require_same(o);
        TermMap t = terms_;
        for (const auto& [m, c] : o.terms_) {
            Rational& slot = t[m];
            slot += c;
            if (slot == 0) t.erase(m);
        }
        return RingElement(pres_, std::move(t));
    }

    RingElement operator-(const RingElement& o) const { return *this + (-o); }

    RingElement operator*(const Rational& s) const {
        if (s == 0) return zero(pres_);
        TermMap t = terms_;
        for (auto& [m, c] : t) c *= s;
        return RingElement(pres_, std::move(t));
    }

    /// Graded-commutative product, reduced to normal form.
    RingElement operator*(const RingElement& o) const {
        require_same(o);
        RawTerms raw;
        raw.reserve(terms_.size() * o.terms_.size());
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) {
                auto prod = detail::mono_mul(*pres_, ma, mb);
                if (!prod) continue;
                raw.emplace_back(std::move(prod->first), ca * cb * prod->second);
            }
        return from_raw(pres_, std::move(raw));
    }

    RingElement pow(int e) const {
        if (e < 0) throw std::invalid_argument("RingElement::pow: negative exponent");
        RingElement acc = one(pres_);
        for (int i = 0; i < e; ++i) acc = acc * *this;
        return acc;
    }

    bool operator==(const RingElement& o) const {
        return pres_.get() == o.pres_.get() && terms_ == o.terms_;
    }

    std::string str() const { return format_terms(*pres_, terms_); }

private:
    RingElement(PresPtr pres, TermMap terms) : pres_(std::move(pres)), terms_(std::move(terms)) {}

    void require_same(const RingElement& o) const {
        if (pres_.get() != o.pres_.get())
            throw std::invalid_argument("ring elements belong to different presentations");
    }

    PresPtr pres_;
    TermMap terms_;
};

inline RingElement operator*(const Rational& s, const RingElement& x) { return x * s; }

/// Re-reduces an element. Elements are stored in normal form, so this is the
/// identity; it exists so idempotence is a testable statement.
inline RingElement normal_form(const RingElement& x) {
    RawTerms raw(x.terms().begin(), x.terms().end());
    return RingElement::from_raw(x.presentation(), std::move(raw));
}

/// Transplants terms of x into `target`, matching generators by name, and
/// reduces there. Source monomials must only use generators that exist in the
/// target.
inline RingElement transport(const RingElement& x, const PresPtr& target) {
    const RingPresentation& src = *x.presentation();
    std::vector<std::size_t> map(src.generator_count());
    for (std::size_t i = 0; i < src.generator_count(); ++i) {
        auto j = target->find_generator(src.generator(i).name);
        if (!j)
            throw std::invalid_argument("transport: generator '" + src.generator(i).name +
                                        "' missing from target presentation");
        map[i] = *j;
    }
    // Same relative order required, otherwise odd-generator signs would shift.
    for (std::size_t i = 1; i < map.size(); ++i)
        if (map[i] <= map[i - 1])
            throw std::invalid_argument("transport: generator order differs between presentations");
    RawTerms raw;
    for (const auto& [m, c] : x.terms()) {
        Monomial t(target->generator_count());
        for (std::size_t i = 0; i < src.generator_count(); ++i) t.exp(map[i]) = m.exp(i);
        raw.emplace_back(std::move(t), c);
    }
    return RingElement::from_raw(target, std::move(raw));
}

}  // namespace chowlef
