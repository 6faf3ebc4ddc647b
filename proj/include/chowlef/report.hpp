#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "chowlef/matrix.hpp"

namespace chowlef {

enum class Verdict { injective, not_injective, iso, not_iso };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::injective: return "injective";
        case Verdict::not_injective: return "not-injective";
        case Verdict::iso: return "iso";
        case Verdict::not_iso: return "not-iso";
    }
    return "?";
}

inline bool passed(Verdict v) { return v == Verdict::injective || v == Verdict::iso; }

/// Outcome of one injectivity / isomorphism check. Everything needed to
/// reproduce the verdict is recorded: the model, the map, both dimensions,
/// the exact rank, and a kernel basis when the map fails to be injective.
struct LefschetzReport {
    std::string check;     // conj1, conj2, hl, kunnemann, stability, blowup-transfer
    std::string model_id;
    int p = 0;             // codimension (or cohomological degree for hl)
    std::optional<int> s;  // Beauville index, for graded checks
    int exponent = 0;
    std::string divisor;
    std::size_t domain_dim = 0;
    std::size_t codomain_dim = 0;
    std::size_t rank = 0;
    Verdict verdict = Verdict::not_injective;
    std::optional<bool> surjective;  // set by isomorphism checks
    std::vector<std::string> kernel_basis;
    double elapsed_ms = 0.0;

    bool passed() const { return chowlef::passed(verdict); }
};

using IsoReport = LefschetzReport;

struct TriangularDescentReport {
    std::string model_id;
    int p = 0;
    int exponent = 0;
    std::size_t block_count = 0;
    bool block_triangular = false;
    bool diagonal_blocks_match = false;  // diagonal equals the D0-power maps per s-slice
    bool diagonal_injective = false;
    bool full_injective = false;
    double elapsed_ms = 0.0;

    // Descent conclusion: diagonal injectivity forces full injectivity.
    bool descent_holds() const { return !diagonal_injective || full_injective; }
    bool passed() const {
        return block_triangular && diagonal_blocks_match && descent_holds() && full_injective;
    }
};

namespace detail {

class Stopwatch {
public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(clock::now() - start_).count();
    }

private:
    using clock = std::chrono::steady_clock;
    clock::time_point start_ = clock::now();
};

}  // namespace detail

/// Rank check of x -> x * D^exponent from codimension p, written once for
/// every graded ring in the library (presentation rings, blow-up rings).
template <class Ring>
LefschetzReport multiplication_injectivity_report(const Ring& ring,
                                                  const typename Ring::Element& divisor,
                                                  int p, int exponent, std::string check,
                                                  std::string divisor_str, bool as_iso = false,
                                                  int divisor_codim = 1) {
    detail::Stopwatch timer;
    LefschetzReport rep;
    rep.check = std::move(check);
    rep.model_id = ring.id();
    rep.p = p;
    rep.exponent = exponent;
    rep.divisor = std::move(divisor_str);

    typename Ring::Element power = divisor;
    {
        // divisor^exponent, multiplied out in the ring
        auto acc = ring.basis_elements(0).at(0);  // the unit
        for (int i = 0; i < exponent; ++i) acc = ring.multiply(acc, divisor);
        power = acc;
    }

    auto domain = ring.basis_elements(p);
    rep.domain_dim = domain.size();
    const int q = p + exponent * divisor_codim;
    std::vector<std::vector<Rational>> cols;
    for (const auto& b : domain) cols.push_back(ring.coordinates(ring.multiply(power, b), q));
    rep.codomain_dim = cols.empty() ? ring.basis_elements(q).size() : cols[0].size();

    Matrix m(rep.codomain_dim, rep.domain_dim);
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < cols[j].size(); ++i) m.at(i, j) = cols[j][i];

    RankKernel rk = rank_and_kernel(m);
    rep.rank = rk.rank;
    const bool inj = rk.rank == rep.domain_dim;
    if (as_iso) {
        rep.surjective = rk.rank == rep.codomain_dim;
        rep.verdict = (inj && *rep.surjective) ? Verdict::iso : Verdict::not_iso;
    } else {
        rep.verdict = inj ? Verdict::injective : Verdict::not_injective;
    }
    for (const auto& v : rk.kernel_basis) {
        typename Ring::Element e = ring.basis_elements(0).at(0);
        bool first = true;
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (v[j] == 0) continue;
            auto term = ring.scale(domain[j], v[j]);
            e = first ? term : ring.add(e, term);
            first = false;
        }
        rep.kernel_basis.push_back(ring.str(e));
    }
    rep.elapsed_ms = timer.ms();
    return rep;
}

}  // namespace chowlef
