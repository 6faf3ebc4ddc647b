#include <catch2/catch_amalgamated.hpp>

#include "chowlef/blowup.hpp"
#include "chowlef/bundle.hpp"
#include "chowlef/checker.hpp"
#include "chowlef/expr.hpp"

using namespace chowlef;

TEST_CASE("conj1 on pinned models") {
    SymPowRing sym2 = sympow_ring(2, SymPowMode::theta);
    Model m = sympow_model(sym2);
    LefschetzReport r = check_conj1(m, sym2.z_elem(), 1);
    CHECK(r.verdict == Verdict::injective);
    CHECK(r.domain_dim == 2);
    CHECK(r.exponent == 1);

    Model p3 = projective_space_model(3);
    LefschetzReport rp = check_conj1(p3, *p3.ample, 1);
    CHECK(rp.verdict == Verdict::injective);
    CHECK(rp.rank == 1);

    Model d4 = build_model(ModelKind::divisor, 4);
    LefschetzReport rd = check_conj1(d4, *d4.ample, 1);
    CHECK(rd.verdict == Verdict::injective);
    CHECK(rd.domain_dim == 2);
    CHECK(rd.codomain_dim == 4);
    CHECK(rd.rank == 2);

    Model t2 = build_model(ModelKind::theta, 2);
    CHECK_THROWS_WITH(check_conj1(t2, *t2.ample, 2),
                      Catch::Matchers::ContainsSubstring("hypothesis violated"));
    Model d2 = build_model(ModelKind::divisor, 2);
    RingElement not_div = parse_element(d2.pres, "D0^2");
    CHECK_THROWS_AS(check_conj1(d2, not_div, 0), std::invalid_argument);
}

TEST_CASE("conj1 sweeps theta-mode symmetric products") {
    for (int g = 1; g <= 6; ++g) {
        SymPowRing sym = sympow_ring(g, SymPowMode::theta);
        Model m = sympow_model(sym);
        for (int p = 0; 2 * p <= 2 * g - 1; ++p) {
            LefschetzReport r = check_conj1(m, sym.z_elem(), p);
            INFO("g=" << g << " p=" << p);
            CHECK(r.verdict == Verdict::injective);
        }
    }
}

TEST_CASE("conj2 on pinned models") {
    Model t3 = build_model(ModelKind::theta, 3);
    LefschetzReport rt = check_conj2(t3, *t3.ample, 1);
    CHECK(rt.verdict == Verdict::injective);  // hom part zero, vacuous
    CHECK(rt.domain_dim == 0);

    Model d3 = build_model(ModelKind::divisor, 3);
    LefschetzReport rd = check_conj2(d3, *d3.ample, 1);
    CHECK(rd.verdict == Verdict::injective);
    CHECK(rd.domain_dim == 1);  // hom part <D1>
    CHECK(rd.exponent == 2);
    // expansion oracle: (D0+D1)^2 D1 = D0^2 D1 + 2 D0 D1^2 + D1^3, nonzero
    RingElement img = (*d3.ample).pow(2) * RingElement::generator(d3.pres, 1);
    CHECK(img == parse_element(d3.pres, "D0^2*D1 + 2*D0*D1^2 + D1^3"));
    CHECK_FALSE(img.is_zero());

    Model coh = build_model(ModelKind::cohomology, 2);
    CHECK_THROWS_WITH(check_conj2(coh, cohomology_omega(coh.pres), 1),
                      Catch::Matchers::ContainsSubstring("cycle-class"));
}

TEST_CASE("conj2 through a projective bundle over the curve model") {
    Model c = curve_model(1);
    std::vector<RingElement> chern = {RingElement::generator(c.pres, 0) * Rational(3),
                                      RingElement::zero(c.pres), RingElement::zero(c.pres)};
    Model bundle = bundle_model(c, chern, 2);
    REQUIRE(bundle.hom_declared);
    LefschetzReport r = check_conj2(bundle, *bundle.ample, 1);
    CHECK(r.verdict == Verdict::injective);
    CHECK(r.domain_dim == 1);  // <V1>

    LefschetzReport r1 = check_conj1(bundle, *bundle.ample, 1);
    CHECK(r1.verdict == Verdict::injective);
}

TEST_CASE("hard Lefschetz on the cohomology model") {
    Model c1 = build_model(ModelKind::cohomology, 1);
    IsoReport r0 = check_hl_cohomology(c1, 0);
    CHECK(r0.verdict == Verdict::iso);
    CHECK(r0.domain_dim == 1);

    Model c2 = build_model(ModelKind::cohomology, 2);
    IsoReport r1 = check_hl_cohomology(c2, 1);
    CHECK(r1.verdict == Verdict::iso);
    CHECK(r1.domain_dim == 4);
    CHECK(r1.exponent == 1);

    Model c3 = build_model(ModelKind::cohomology, 3);
    IsoReport r2 = check_hl_cohomology(c3, 2);
    CHECK(r2.verdict == Verdict::iso);
    CHECK(r2.domain_dim == 15);

    CHECK_THROWS_AS(check_hl_cohomology(c3, 7), std::invalid_argument);
    Model t2 = build_model(ModelKind::theta, 2);
    CHECK_THROWS_AS(check_hl_cohomology(t2, 1), std::invalid_argument);
}

TEST_CASE("hard Lefschetz across all degrees up to g = 4") {
    for (int g = 1; g <= 4; ++g) {
        Model coh = build_model(ModelKind::cohomology, g);
        for (int k = 0; k <= 2 * g; ++k) {
            IsoReport r = check_hl_cohomology(coh, k);
            INFO("g=" << g << " k=" << k);
            CHECK(r.verdict == Verdict::iso);
            CHECK(r.domain_dim == static_cast<std::size_t>(binomial(2 * g, k)));
        }
    }
}

TEST_CASE("kunnemann graded isomorphisms") {
    Model d3 = build_model(ModelKind::divisor, 3);
    IsoReport a = check_kunnemann(d3, 1, 0);
    CHECK(a.verdict == Verdict::iso);
    CHECK(a.exponent == 1);
    CHECK(a.domain_dim == 1);

    IsoReport b = check_kunnemann(d3, 1, 1);
    CHECK(b.verdict == Verdict::iso);
    CHECK(b.exponent == 2);

    Model d5 = build_model(ModelKind::divisor, 5);
    IsoReport c = check_kunnemann(d5, 2, 1);
    CHECK(c.verdict == Verdict::iso);
    CHECK(c.domain_dim == 1);

    CHECK_THROWS_AS(check_kunnemann(d3, 3, 0), std::invalid_argument);  // 2p-s > g

    for (int g = 2; g <= 6; ++g) {
        Model m = build_model(ModelKind::divisor, g);
        for (int p = 0; p <= g; ++p)
            for (int s = 0; s <= p; ++s) {
                if (2 * p - s < 0 || 2 * p - s > g) continue;
                IsoReport r = check_kunnemann(m, p, s);
                INFO("g=" << g << " p=" << p << " s=" << s);
                CHECK(r.verdict == Verdict::iso);
            }
    }
}

TEST_CASE("triangular descent") {
    Model d4 = build_model(ModelKind::divisor, 4);
    TriangularDescentReport r = check_triangular_descent(d4, 1);
    CHECK(r.block_triangular);
    CHECK(r.diagonal_blocks_match);
    CHECK(r.diagonal_injective);
    CHECK(r.full_injective);
    CHECK(r.descent_holds());
    CHECK(r.passed());

    Model d2 = build_model(ModelKind::divisor, 2);
    TriangularDescentReport r0 = check_triangular_descent(d2, 1);
    CHECK(r0.exponent == 0);  // identity map
    CHECK(r0.passed());

    Model d6 = build_model(ModelKind::divisor, 6);
    CHECK(check_triangular_descent(d6, 2).passed());

    CHECK_THROWS_AS(check_triangular_descent(d2, 2), std::invalid_argument);
}

TEST_CASE("2-implies-1 at model level") {
    // Wherever conj2 and the matching cohomological iso hold, conj1 holds.
    for (int g = 2; g <= 5; ++g) {
        Model div = build_model(ModelKind::divisor, g);
        Model coh = build_model(ModelKind::cohomology, g);
        std::vector<RingElement> divisors = {
            *div.ample, RingElement::generator(div.pres, 0),
            RingElement::generator(div.pres, 0) * Rational(2) + RingElement::generator(div.pres, 1)};
        for (const RingElement& D : divisors)
            for (int p = 0; 2 * p <= g; ++p) {
                bool conj2_ok = check_conj2(div, D, p).passed();
                bool hl_ok = check_hl_cohomology(coh, 2 * p).passed();
                if (conj2_ok && hl_ok) {
                    INFO("g=" << g << " p=" << p << " D=" << D.str());
                    CHECK(check_conj1(div, D, p).passed());
                }
            }
    }
}
