#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chowlef/element.hpp"
#include "chowlef/linear_map.hpp"
#include "chowlef/presentation.hpp"
#include "chowlef/rational.hpp"
#include "chowlef/report.hpp"
#include "chowlef/ring_hom.hpp"

namespace chowlef {

/// Input data for the blow-up of X along a smooth center Y of codimension
/// r+1: the pullback and pushforward along the inclusion iota: Y -> X, and
/// the Chern classes of the normal bundle.
struct BlowupData {
    PresPtr X;
    PresPtr Y;
    int r = 1;
    std::vector<RingElement> iota_pullback;                   // per X generator, element over Y
    std::map<Monomial, RingElement, MonoGreater> iota_push;   // Y basis monomial -> element over X
    std::vector<RingElement> normal_chern;                    // c_1 .. c_{r+1} over Y
    std::string id;
};

class BlowupRing;
using BlowupRingPtr = std::shared_ptr<const BlowupRing>;

/// Chow class on the blow-up in decomposed form: a pullback part from X and
/// exceptional parts exc[i] = coefficient of j_*(h^i g^*(.)) for i = 0..r-1.
/// Classes are always stored in this canonical shape, so the decomposition
/// map is just field access and compose/decompose are mutually inverse.
struct BlowupClass {
    RingElement base;
    std::vector<RingElement> exc;

    bool operator==(const BlowupClass& o) const { return base == o.base && exc == o.exc; }
    bool is_zero() const {
        if (!base.is_zero()) return false;
        for (const auto& e : exc)
            if (!e.is_zero()) return false;
        return true;
    }
};

/// Intersection ring of a blow-up, with multiplication implemented through
/// the relations j^*j_* = -h, j^*f^* = g^* iota^*, the Grothendieck relation
/// for h on the exceptional bundle, and the fold-back
/// j_*(h^r g^*y) = f^*(iota_* y) - sum_{i<r} j_*(h^i g^*(c_{r-i} y)).
class BlowupRing : public std::enable_shared_from_this<BlowupRing> {
public:
    using Element = BlowupClass;

    static BlowupRingPtr create(BlowupData data) {
        auto ring = BlowupRingPtr(new BlowupRing(std::move(data)));
        ring->validate();
        return ring;
    }

    const BlowupData& data() const { return d_; }
    std::string id() const { return d_.id; }
    int dimension() const { return d_.X->truncation_dim(); }
    int center_dim() const { return d_.Y->truncation_dim(); }

    Element zero() const {
        return Element{RingElement::zero(d_.X),
                       std::vector<RingElement>(static_cast<std::size_t>(d_.r), RingElement::zero(d_.Y))};
    }

    Element from_base(const RingElement& x) const {
        require_over(x, *d_.X, "from_base");
        Element e = zero();
        e.base = x;
        return e;
    }

    /// j_*(h^hpow g^* y), reduced to canonical form. Any hpow >= 0 is
    /// accepted; powers at or above r+1 go through the Grothendieck relation
    /// and the h^r layer folds back into the base.
    Element exceptional(int hpow, const RingElement& y) const {
        require_over(y, *d_.Y, "exceptional");
        if (hpow < 0) throw std::invalid_argument("exceptional: negative h power");
        std::vector<RingElement> layers(static_cast<std::size_t>(hpow) + 1, RingElement::zero(d_.Y));
        layers[static_cast<std::size_t>(hpow)] = y;
        Element e = zero();
        absorb_layers(e, std::move(layers));
        return e;
    }

    Element exceptional_divisor() const { return exceptional(0, RingElement::one(d_.Y)); }

    RingElement iota_pull(const RingElement& x) const {
        require_over(x, *d_.X, "iota_pull");
        return apply_hom(x, d_.Y, d_.iota_pullback);
    }

    RingElement iota_push(const RingElement& y) const {
        require_over(y, *d_.Y, "iota_push");
        RingElement out = RingElement::zero(d_.X);
        for (const auto& [m, c] : y.terms()) {
            auto it = d_.iota_push.find(m);
            if (it == d_.iota_push.end())
                throw std::logic_error("iota_push: no image for basis monomial " +
                                       d_.Y->monomial_str(m));
            out = out + it->second * c;
        }
        return out;
    }

    Element multiply(const Element& a, const Element& b) const {
        Element out = from_base(a.base * b.base);
        std::vector<RingElement> layers(static_cast<std::size_t>(2 * d_.r), RingElement::zero(d_.Y));
        RingElement ia = iota_pull(a.base), ib = iota_pull(b.base);
        for (int l = 0; l < d_.r; ++l) {
            layers[static_cast<std::size_t>(l)] =
                layers[static_cast<std::size_t>(l)] + ia * b.exc[static_cast<std::size_t>(l)] +
                ib * a.exc[static_cast<std::size_t>(l)];
        }
        for (int i = 0; i < d_.r; ++i)
            for (int l = 0; l < d_.r; ++l) {
                RingElement prod = a.exc[static_cast<std::size_t>(i)] * b.exc[static_cast<std::size_t>(l)];
                if (prod.is_zero()) continue;
                layers[static_cast<std::size_t>(i + l + 1)] =
                    layers[static_cast<std::size_t>(i + l + 1)] - prod;  // j^* j_* = -h
            }
        absorb_layers(out, std::move(layers));
        return out;
    }

    Element add(const Element& a, const Element& b) const {
        Element out;
        out.base = a.base + b.base;
        for (std::size_t i = 0; i < a.exc.size(); ++i) out.exc.push_back(a.exc[i] + b.exc[i]);
        return out;
    }

    Element scale(const Element& a, const Rational& c) const {
        Element out;
        out.base = a.base * c;
        for (const auto& e : a.exc) out.exc.push_back(e * c);
        return out;
    }

    /// f_* drops the exceptional layers (g_* kills h^i for i < r) and keeps
    /// the base, since f is birational.
    RingElement f_star(const Element& a) const { return a.base; }

    /// Codimension of a homogeneous class: base has codim p, layer i has
    /// codim p-1-i.
    std::optional<int> codim(const Element& a) const {
        std::optional<int> c;
        auto merge = [&](std::optional<int> part) {
            if (!part) return true;
            if (c && *c != *part) return false;
            c = *part;
            return true;
        };
        if (!a.base.is_homogeneous()) return std::nullopt;
        if (!merge(a.base.codim())) return std::nullopt;
        for (int i = 0; i < d_.r; ++i) {
            const RingElement& y = a.exc[static_cast<std::size_t>(i)];
            if (!y.is_homogeneous()) return std::nullopt;
            auto yc = y.codim();
            if (yc && !merge(*yc + i + 1)) return std::nullopt;
        }
        return c;
    }

    std::vector<Element> basis_elements(int p) const {
        std::vector<Element> out;
        if (p >= 0 && p <= dimension())
            for (const Monomial& m : d_.X->graded_basis(p))
                out.push_back(from_base(RingElement::monomial(d_.X, m)));
        for (int i = 0; i < d_.r; ++i) {
            int q = p - 1 - i;
            if (q < 0 || q > center_dim()) continue;
            for (const Monomial& m : d_.Y->graded_basis(q)) {
                Element e = zero();
                e.exc[static_cast<std::size_t>(i)] = RingElement::monomial(d_.Y, m);
                out.push_back(std::move(e));
            }
        }
        return out;
    }

    std::vector<Rational> coordinates(const Element& x, int p) const {
        std::vector<Rational> coords;
        {
            auto basis = d_.X->graded_basis(p);
            auto part = expand_in_basis(x.base, basis);
            coords.insert(coords.end(), part.begin(), part.end());
        }
        for (int i = 0; i < d_.r; ++i) {
            int q = p - 1 - i;
            if (q < 0 || q > center_dim()) {
                if (!x.exc[static_cast<std::size_t>(i)].is_zero())
                    throw std::invalid_argument("coordinates: class not homogeneous of codim " +
                                                std::to_string(p));
                continue;
            }
            auto part = expand_in_basis(x.exc[static_cast<std::size_t>(i)], d_.Y->graded_basis(q));
            coords.insert(coords.end(), part.begin(), part.end());
        }
        return coords;
    }

    std::string str(const Element& a) const {
        std::string s;
        if (!a.base.is_zero()) s = "f*(" + a.base.str() + ")";
        for (int i = 0; i < d_.r; ++i) {
            const RingElement& y = a.exc[static_cast<std::size_t>(i)];
            if (y.is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += "j_*(h^" + std::to_string(i) + "*g*(" + y.str() + "))";
        }
        return s.empty() ? "0" : s;
    }

private:
    explicit BlowupRing(BlowupData data) : d_(std::move(data)) {}

    static void require_over(const RingElement& x, const RingPresentation& pres, const char* op) {
        if (x.presentation().get() != &pres)
            throw std::invalid_argument(std::string(op) + ": element lies in the wrong ring");
    }

    /// Reduces a full stack of exceptional layers (h-degree indexed) into the
    /// element: Grothendieck relation above degree r, fold-back at degree r.
    void absorb_layers(Element& out, std::vector<RingElement> layers) const {
        const int r = d_.r;
        for (int deg = static_cast<int>(layers.size()) - 1; deg >= r + 1; --deg) {
            RingElement top = layers[static_cast<std::size_t>(deg)];
            if (top.is_zero()) continue;
            layers[static_cast<std::size_t>(deg)] = RingElement::zero(d_.Y);
            for (int i = 1; i <= r + 1; ++i)
                layers[static_cast<std::size_t>(deg - i)] =
                    layers[static_cast<std::size_t>(deg - i)] -
                    d_.normal_chern[static_cast<std::size_t>(i - 1)] * top;
        }
        if (layers.size() > static_cast<std::size_t>(r)) {
            RingElement top = layers[static_cast<std::size_t>(r)];
            if (!top.is_zero()) {
                out.base = out.base + iota_push(top);
                for (int i = 0; i < r; ++i)
                    layers[static_cast<std::size_t>(i)] =
                        layers[static_cast<std::size_t>(i)] -
                        d_.normal_chern[static_cast<std::size_t>(r - i - 1)] * top;
            }
        }
        for (int i = 0; i < r && i < static_cast<int>(layers.size()); ++i)
            out.exc[static_cast<std::size_t>(i)] =
                out.exc[static_cast<std::size_t>(i)] + layers[static_cast<std::size_t>(i)];
    }

    void validate() const {
        if (!d_.X || !d_.Y) throw std::invalid_argument("blowup: missing presentation");
        if (d_.r < 1) throw std::invalid_argument("blowup: center codimension r+1 must be >= 2");
        const int n = d_.X->truncation_dim(), dY = d_.Y->truncation_dim();
        if (dY != n - d_.r - 1)
            throw std::invalid_argument("blowup: dim Y must equal dim X - r - 1");
        if (d_.iota_pullback.size() != d_.X->generator_count())
            throw std::invalid_argument("blowup: one pullback image per X generator required");
        for (std::size_t i = 0; i < d_.iota_pullback.size(); ++i) {
            const RingElement& img = d_.iota_pullback[i];
            require_over(img, *d_.Y, "blowup pullback image");
            if (!img.is_zero() && img.codim() != std::optional<int>(d_.X->generator(i).codim))
                throw std::invalid_argument("blowup: pullback image of '" +
                                            d_.X->generator(i).name + "' has wrong codimension");
        }
        if (d_.normal_chern.size() != static_cast<std::size_t>(d_.r + 1))
            throw std::invalid_argument("blowup: need c_1..c_{r+1} of the normal bundle");
        for (std::size_t i = 0; i < d_.normal_chern.size(); ++i) {
            const RingElement& c = d_.normal_chern[i];
            require_over(c, *d_.Y, "normal chern class");
            if (!c.is_zero() && c.codim() != std::optional<int>(static_cast<int>(i) + 1))
                throw std::invalid_argument("blowup: c_" + std::to_string(i + 1) +
                                            " has wrong codimension");
        }
        for (int q = 0; q <= dY; ++q)
            for (const Monomial& m : d_.Y->graded_basis(q)) {
                auto it = d_.iota_push.find(m);
                if (it == d_.iota_push.end())
                    throw std::invalid_argument("blowup: pushforward image missing for " +
                                                d_.Y->monomial_str(m));
                require_over(it->second, *d_.X, "blowup pushforward image");
                if (!it->second.is_zero() &&
                    it->second.codim() != std::optional<int>(q + d_.r + 1))
                    throw std::invalid_argument("blowup: pushforward of " + d_.Y->monomial_str(m) +
                                                " must shift codimension by r+1");
            }

        // Projection formula on basis samples: iota_*(iota^*(x) y) = x iota_*(y).
        for (int px = 0; px <= n; ++px)
            for (const Monomial& mx : d_.X->graded_basis(px)) {
                RingElement x = RingElement::monomial(d_.X, mx);
                RingElement pulled = iota_pull(x);
                for (int qy = 0; qy <= dY; ++qy)
                    for (const Monomial& my : d_.Y->graded_basis(qy)) {
                        RingElement y = RingElement::monomial(d_.Y, my);
                        if (!(iota_push(pulled * y) == x * iota_push(y)))
                            throw std::invalid_argument(
                                "blowup: projection formula fails on sample (" +
                                d_.X->monomial_str(mx) + ", " + d_.Y->monomial_str(my) + ")");
                    }
            }
    }

    BlowupData d_;
};

/// Blow-up of P^n along a linear P^d center: iota^* H = h, iota_* h^i =
/// H^(n-d+i), and the normal bundle O(1)^(n-d) has c_i = C(n-d, i) h^i.
inline BlowupRingPtr blowup_projective_space_along_linear(int n, int d) {
    if (n < 2 || d < 0 || n - d < 2)
        throw std::invalid_argument("blowup_projective_space_along_linear: need 0 <= d <= n-2");
    PresentationData xd;
    xd.id = "P^" + std::to_string(n);
    xd.generators.push_back({"H", 1, 2, Parity::even});
    xd.truncation_dim = n;
    PresPtr X = build_presentation(std::move(xd));

    PresentationData yd;
    yd.id = "P^" + std::to_string(d);
    if (d > 0) yd.generators.push_back({"h", 1, 2, Parity::even});
    yd.truncation_dim = d;
    PresPtr Y = build_presentation(std::move(yd));

    BlowupData data;
    data.X = X;
    data.Y = Y;
    data.r = n - d - 1;
    data.id = "blowup(P^" + std::to_string(n) + ",P^" + std::to_string(d) + ")";
    data.iota_pullback.push_back(d > 0 ? RingElement::generator(Y, 0) : RingElement::zero(Y));
    RingElement H = RingElement::generator(X, 0);
    for (int i = 0; i <= d; ++i) {
        Monomial m(Y->generator_count());
        if (d > 0) m.exp(0) = i;
        data.iota_push.emplace(std::move(m), H.pow(n - d + i));
    }
    for (int i = 1; i <= data.r + 1; ++i) {
        // c(N) = (1+h)^(n-d); powers past dim Y truncate to zero on their own
        RingElement ci = d > 0 ? RingElement::generator(Y, 0).pow(i) * Rational(binomial(n - d, i))
                               : RingElement::zero(Y);
        data.normal_chern.push_back(std::move(ci));
    }
    return BlowupRing::create(std::move(data));
}

struct BlowupTransferReport {
    LefschetzReport blowup;           // conj1 for (Z, f^*L + mE, p)
    LefschetzReport base_hypothesis;  // conj1 for (X, L, p), the assumption side
    Rational m;
};

/// Conjecture-1 transfer check on a blow-up: builds D' = f^*(L) + m E with
/// m < 0, clears denominators (a positive rescale never changes the kernel),
/// and rank-checks multiplication by D'^(n-2p) out of codimension p.
/// Ampleness of D' is an input assumption and is not verified.
inline BlowupTransferReport blowup_transfer_check(const BlowupRingPtr& ring, const RingElement& L,
                                                  const Rational& m, int p) {
    const int n = ring->dimension();
    if (m >= 0) throw std::invalid_argument("blowup_transfer_check: m must be negative");
    if (p < 0 || n - 2 * p < 0)
        throw std::invalid_argument("blowup_transfer_check: no Lefschetz exponent (n < 2p)");
    if (L.codim() != std::optional<int>(1))
        throw std::invalid_argument("blowup_transfer_check: L must be homogeneous of codim 1");

    Rational scale(denominator(m));
    BlowupClass divisor = ring->add(ring->scale(ring->from_base(L), scale),
                                    ring->scale(ring->exceptional_divisor(), m * scale));
    std::string divisor_str = "f*(" + L.str() + ") + (" + to_string(m) + ")*E";

    BlowupTransferReport out;
    out.m = m;
    out.blowup = multiplication_injectivity_report(*ring, divisor, p, n - 2 * p,
                                                   "blowup-transfer", divisor_str);
    out.base_hypothesis = multiplication_injectivity_report(PresRing(ring->data().X), L, p,
                                                            n - 2 * p, "conj1", L.str());
    return out;
}

}  // namespace chowlef
