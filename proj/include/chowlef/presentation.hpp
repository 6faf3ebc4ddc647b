#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chowlef/rational.hpp"

namespace chowlef {

enum class Parity { even, odd };

struct GeneratorSpec {
    std::string name;
    int codim = 1;       // codimension of the generator
    int kweight = 0;     // multiplication-by-k pullback scales by k^kweight
    Parity parity = Parity::even;
};

/// Exponent vector over the generators of one presentation. Odd generators
/// only ever carry exponent 0 or 1.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t width) : exps_(width, 0) {}
    explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {}

    std::size_t width() const { return exps_.size(); }
    int exp(std::size_t i) const { return exps_[i]; }
    int& exp(std::size_t i) { return exps_[i]; }
    const std::vector<int>& exps() const { return exps_; }
    bool is_one() const {
        return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
    }
    int total_degree() const {
        int t = 0;
        for (int e : exps_) t += e;
        return t;
    }

    bool operator==(const Monomial&) const = default;
    // Lexicographic on the declared generator order.
    bool operator<(const Monomial& o) const { return exps_ < o.exps_; }

private:
    std::vector<int> exps_;
};

/// Term order used everywhere: descending lex, so that e.g. the codim-2 basis
/// of Q[D0,D1] lists D0^2, D0*D1, D1^2 in that order.
struct MonoGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return b < a; }
};

using RawTerms = std::vector<std::pair<Monomial, Rational>>;

/// Rewrite rule with lead monomial gen^power. The right side must be
/// codim-homogeneous, have degree < power in the ruled generator, and use no
/// later generator, which makes the whole system terminate and confluence
/// structural (one rule per generator, pure-power leads).
struct RewriteRule {
    std::size_t gen = 0;
    int power = 1;
    RawTerms rhs;
};

/// Extra vanishing constraint: a monomial dies when sum(weights[i]*exp[i])
/// exceeds cap. Used for coefficient subrings (e.g. CH(J) inside CH(J)[z]).
struct DegreeBound {
    std::vector<int> weights;
    int cap = 0;
};

struct PresentationData {
    std::string id;
    std::vector<GeneratorSpec> generators;
    int truncation_dim = 0;
    std::vector<RewriteRule> rules;
    std::vector<DegreeBound> extra_bounds;
};

class RingPresentation;
using PresPtr = std::shared_ptr<const RingPresentation>;

/// A finite graded-commutative ring given by generators and triangular
/// rewrite rules, truncated above truncation_dim. Immutable once built.
class RingPresentation {
public:
    const std::string& id() const { return id_; }
    std::size_t generator_count() const { return gens_.size(); }
    const GeneratorSpec& generator(std::size_t i) const { return gens_[i]; }
    const std::vector<GeneratorSpec>& generators() const { return gens_; }
    int truncation_dim() const { return truncation_; }
    const std::vector<DegreeBound>& extra_bounds() const { return extra_bounds_; }
    const std::vector<RewriteRule>& rules() const { return rules_; }

    std::optional<std::size_t> find_generator(std::string_view name) const {
        for (std::size_t i = 0; i < gens_.size(); ++i)
            if (gens_[i].name == name) return i;
        return std::nullopt;
    }

    const RewriteRule* rule_for(std::size_t gen) const { return rule_index_[gen]; }

    int codim(const Monomial& m) const {
        int c = 0;
        for (std::size_t i = 0; i < gens_.size(); ++i) c += gens_[i].codim * m.exp(i);
        return c;
    }

    int kweight(const Monomial& m) const {
        int w = 0;
        for (std::size_t i = 0; i < gens_.size(); ++i) w += gens_[i].kweight * m.exp(i);
        return w;
    }

    bool exceeds_bounds(const Monomial& m) const {
        if (codim(m) > truncation_) return true;
        for (const DegreeBound& b : extra_bounds_) {
            int w = 0;
            for (std::size_t i = 0; i < gens_.size(); ++i) w += b.weights[i] * m.exp(i);
            if (w > b.cap) return true;
        }
        return false;
    }

    /// True when some rewrite applies or the monomial vanishes by truncation.
    bool reducible(const Monomial& m) const {
        if (exceeds_bounds(m)) return true;
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            if (gens_[i].parity == Parity::odd && m.exp(i) > 1) return true;
            if (rule_index_[i] && m.exp(i) >= rule_index_[i]->power) return true;
        }
        return false;
    }

    /// All normal-form monomials of codimension p, descending lex.
    std::vector<Monomial> graded_basis(int p) const {
        if (p < 0 || p > truncation_)
            throw std::invalid_argument("graded_basis: codimension " + std::to_string(p) +
                                        " out of range for " + id_);
        std::vector<Monomial> out;
        Monomial cur(gens_.size());
        enumerate(0, p, cur, out);
        return out;
    }

    std::string monomial_str(const Monomial& m) const {
        if (m.is_one()) return "1";
        std::string s;
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            int e = m.exp(i);
            if (e == 0) continue;
            if (!s.empty()) s += "*";
            s += gens_[i].name;
            if (e > 1) s += "^" + std::to_string(e);
        }
        return s;
    }

    friend PresPtr build_presentation(PresentationData data);

    RingPresentation(const RingPresentation&) = delete;
    RingPresentation& operator=(const RingPresentation&) = delete;

private:
    explicit RingPresentation(PresentationData d)
        : id_(std::move(d.id)),
          gens_(std::move(d.generators)),
          truncation_(d.truncation_dim),
          rules_(std::move(d.rules)),
          extra_bounds_(std::move(d.extra_bounds)) {
        validate();
        rule_index_.assign(gens_.size(), nullptr);
        for (const RewriteRule& r : rules_) rule_index_[r.gen] = &r;
    }

    void validate() const {
        if (truncation_ < 0) throw std::invalid_argument("presentation: negative truncation");
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            if (gens_[i].name.empty())
                throw std::invalid_argument("presentation: empty generator name");
            if (gens_[i].codim <= 0)
                throw std::invalid_argument("presentation: generator '" + gens_[i].name +
                                            "' must have positive codimension");
            if (gens_[i].kweight < 0)
                throw std::invalid_argument("presentation: generator '" + gens_[i].name +
                                            "' has negative k-weight");
            for (std::size_t j = i + 1; j < gens_.size(); ++j)
                if (gens_[i].name == gens_[j].name)
                    throw std::invalid_argument("presentation: duplicate generator name '" +
                                                gens_[i].name + "'");
        }
        for (const DegreeBound& b : extra_bounds_)
            if (b.weights.size() != gens_.size())
                throw std::invalid_argument("presentation: bound weight vector width mismatch");

        std::vector<bool> ruled(gens_.size(), false);
        for (const RewriteRule& r : rules_) {
            if (r.gen >= gens_.size()) throw std::invalid_argument("presentation: rule on unknown generator");
            const GeneratorSpec& g = gens_[r.gen];
            if (g.parity == Parity::odd)
                throw std::invalid_argument("presentation: rule on odd generator '" + g.name +
                                            "' (odd squares are identically zero)");
            if (r.power < 1) throw std::invalid_argument("presentation: rule power must be >= 1");
            if (ruled[r.gen])
                throw std::invalid_argument("presentation: two rules for generator '" + g.name + "'");
            ruled[r.gen] = true;
            const int lead_codim = r.power * g.codim;
            for (const auto& [m, c] : r.rhs) {
                if (m.width() != gens_.size())
                    throw std::invalid_argument("presentation: rule rhs monomial width mismatch");
                if (c == 0) throw std::invalid_argument("presentation: zero coefficient in rule rhs");
                int mcodim = 0;
                for (std::size_t i = 0; i < gens_.size(); ++i) {
                    int e = m.exp(i);
                    if (e < 0) throw std::invalid_argument("presentation: negative exponent in rule rhs");
                    if (gens_[i].parity == Parity::odd && e > 1)
                        throw std::invalid_argument("presentation: odd generator squared in rule rhs");
                    mcodim += gens_[i].codim * e;
                    if (i > r.gen && e > 0)
                        throw std::invalid_argument(
                            "presentation: rule for '" + g.name +
                            "' is not triangular (rhs uses later generator '" + gens_[i].name + "')");
                    if (i == r.gen && e >= r.power)
                        throw std::invalid_argument("presentation: rule for '" + g.name +
                                                    "' is not triangular (rhs degree not reduced)");
                }
                if (mcodim != lead_codim)
                    throw std::invalid_argument("presentation: relation for '" + g.name +
                                                "' is not homogeneous in codimension");
            }
        }
    }

    void enumerate(std::size_t gi, int remaining, Monomial& cur, std::vector<Monomial>& out) const {
        if (gi == gens_.size()) {
            if (remaining == 0 && !exceeds_bounds(cur)) out.push_back(cur);
            return;
        }
        const GeneratorSpec& g = gens_[gi];
        int emax = remaining / g.codim;
        if (g.parity == Parity::odd) emax = std::min(emax, 1);
        if (rule_index_[gi]) emax = std::min(emax, rule_index_[gi]->power - 1);
        for (int e = emax; e >= 0; --e) {
            cur.exp(gi) = e;
            enumerate(gi + 1, remaining - e * g.codim, cur, out);
        }
        cur.exp(gi) = 0;
    }

    std::string id_;
    std::vector<GeneratorSpec> gens_;
    int truncation_;
    std::vector<RewriteRule> rules_;
    std::vector<DegreeBound> extra_bounds_;
    std::vector<const RewriteRule*> rule_index_;
};

inline PresPtr build_presentation(PresentationData data) {
    return PresPtr(new RingPresentation(std::move(data)));
}

}  // namespace chowlef
