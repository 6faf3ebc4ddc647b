#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "chowlef/element.hpp"
#include "chowlef/expr.hpp"
#include "chowlef/linear_map.hpp"
#include "chowlef/presentation.hpp"

using namespace chowlef;

namespace {

PresPtr projective_space(int n) {
    PresentationData d;
    d.id = "P^" + std::to_string(n);
    d.generators.push_back({"H", 1, 2, Parity::even});
    d.truncation_dim = n;
    return build_presentation(std::move(d));
}

PresPtr exterior(int count, int truncation) {
    PresentationData d;
    d.id = "ext" + std::to_string(count);
    for (int i = 1; i <= count; ++i)
        d.generators.push_back({"e" + std::to_string(i), 1, 1, Parity::odd});
    d.truncation_dim = truncation;
    return build_presentation(std::move(d));
}

// CH(C^(3)) for genus 2 with theta-specialized coefficients:
// z^2 -> theta*z - theta^2/2, theta^3 = 0.
PresPtr theta_sympow_g2() {
    PresentationData d;
    d.id = "sympow:g=2,mode=theta";
    d.generators.push_back({"theta", 1, 2, Parity::even});
    d.generators.push_back({"z", 1, 2, Parity::even});
    d.truncation_dim = 3;
    d.extra_bounds.push_back({{1, 0}, 2});
    Monomial tz(2), tt(2);
    tz.exp(0) = 1;
    tz.exp(1) = 1;
    tt.exp(0) = 2;
    d.rules.push_back({1, 2, {{tz, Rational(1)}, {tt, Rational(-1, 2)}}});
    return build_presentation(std::move(d));
}

RingElement random_homogeneous(const PresPtr& pres, int p, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 3);
    RawTerms raw;
    for (const Monomial& m : pres->graded_basis(p)) raw.emplace_back(m, Rational(num(rng), den(rng)));
    return RingElement::from_raw(pres, std::move(raw));
}

}  // namespace

TEST_CASE("presentation validation") {
    PresentationData dup;
    dup.generators = {{"H", 1, 2, Parity::even}, {"H", 2, 2, Parity::even}};
    dup.truncation_dim = 2;
    CHECK_THROWS_WITH(build_presentation(std::move(dup)),
                      Catch::Matchers::ContainsSubstring("duplicate generator name"));

    PresentationData inhom;
    inhom.generators = {{"x", 1, 2, Parity::even}};
    inhom.truncation_dim = 4;
    Monomial one(1);
    inhom.rules.push_back({0, 2, {{one, Rational(1)}}});  // x^2 -> 1 is not homogeneous
    CHECK_THROWS_WITH(build_presentation(std::move(inhom)),
                      Catch::Matchers::ContainsSubstring("not homogeneous"));

    PresentationData nontri;
    nontri.generators = {{"x", 1, 2, Parity::even}, {"y", 1, 2, Parity::even}};
    nontri.truncation_dim = 4;
    Monomial y2(2);
    y2.exp(1) = 2;
    nontri.rules.push_back({0, 2, {{y2, Rational(1)}}});  // rule on x uses the later generator y
    CHECK_THROWS_WITH(build_presentation(std::move(nontri)),
                      Catch::Matchers::ContainsSubstring("not triangular"));

    PresentationData oddrule;
    oddrule.generators = {{"e", 1, 1, Parity::odd}};
    oddrule.truncation_dim = 2;
    oddrule.rules.push_back({0, 2, {}});
    CHECK_THROWS_WITH(build_presentation(std::move(oddrule)),
                      Catch::Matchers::ContainsSubstring("odd generator"));
}

TEST_CASE("basis enumeration matches the pinned rings") {
    auto p3 = projective_space(3);
    for (int p = 0; p <= 3; ++p) CHECK(p3->graded_basis(p).size() == 1);
    CHECK_THROWS_AS(p3->graded_basis(4), std::invalid_argument);
    CHECK_THROWS_AS(p3->graded_basis(-1), std::invalid_argument);
    CHECK(p3->monomial_str(p3->graded_basis(2)[0]) == "H^2");

    auto ext2 = exterior(2, 2);
    CHECK(ext2->graded_basis(0).size() == 1);
    auto deg1 = ext2->graded_basis(1);
    REQUIRE(deg1.size() == 2);
    CHECK(ext2->monomial_str(deg1[0]) == "e1");
    CHECK(ext2->monomial_str(deg1[1]) == "e2");
    auto deg2 = ext2->graded_basis(2);
    REQUIRE(deg2.size() == 1);
    CHECK(ext2->monomial_str(deg2[0]) == "e1*e2");

    auto sym = theta_sympow_g2();
    CHECK(sym->graded_basis(0).size() == 1);
    auto c1 = sym->graded_basis(1);
    REQUIRE(c1.size() == 2);  // {theta, z}
    CHECK(sym->monomial_str(c1[0]) == "theta");
    CHECK(sym->monomial_str(c1[1]) == "z");
    auto c2 = sym->graded_basis(2);
    REQUIRE(c2.size() == 2);  // {theta^2, theta*z}
    CHECK(sym->monomial_str(c2[0]) == "theta^2");
    CHECK(sym->monomial_str(c2[1]) == "theta*z");
}

TEST_CASE("multiplication, signs and truncation") {
    auto p3 = projective_space(3);
    RingElement h = RingElement::generator(p3, 0);
    CHECK((h * h.pow(2)).str() == "H^3");
    CHECK(h.pow(4).is_zero());  // codim 4 > 3 truncates

    auto ext = exterior(4, 4);
    RingElement e1 = RingElement::generator(ext, 0), e2 = RingElement::generator(ext, 1);
    CHECK((e2 * e1).str() == "-e1*e2");
    CHECK((e1 * e2).str() == "e1*e2");
    CHECK((e1 * e1).is_zero());
    RingElement e3 = RingElement::generator(ext, 2), e4 = RingElement::generator(ext, 3);
    // (e1e2 + e3e4)^2 = 2 e1e2e3e4
    RingElement omega = e1 * e2 + e3 * e4;
    CHECK((omega * omega).str() == "2*e1*e2*e3*e4");
}

TEST_CASE("normal form in the genus-2 theta symmetric-product ring") {
    auto sym = theta_sympow_g2();
    RingElement theta = RingElement::generator(sym, 0), z = RingElement::generator(sym, 1);
    CHECK((z * z).str() == "-1/2*theta^2 + theta*z");
    CHECK(z.pow(3).str() == "1/2*theta^2*z");
    CHECK(theta.pow(3).is_zero());       // coefficient-ring bound theta <= 2
    CHECK((theta * z * z).str() == "theta^2*z");
    for (int p = 0; p <= 3; ++p) {
        for (const Monomial& m : sym->graded_basis(p)) CHECK_FALSE(sym->reducible(m));
    }
}

TEST_CASE("mult_operator_matrix pinned examples") {
    auto p3 = projective_space(3);
    auto m1 = mult_operator_matrix(p3, RingElement::generator(p3, 0), 1);
    REQUIRE(m1.matrix.rows() == 1);
    REQUIRE(m1.matrix.cols() == 1);
    CHECK(m1.matrix.at(0, 0) == 1);

    auto sym = theta_sympow_g2();
    auto mz = mult_operator_matrix(sym, RingElement::generator(sym, 1), 1);
    REQUIRE(mz.matrix.rows() == 2);
    REQUIRE(mz.matrix.cols() == 2);
    // bases {theta, z} -> {theta^2, theta*z}: columns z*theta and z*z
    CHECK(mz.matrix.at(0, 0) == 0);
    CHECK(mz.matrix.at(1, 0) == 1);
    CHECK(mz.matrix.at(0, 1) == Rational(-1, 2));
    CHECK(mz.matrix.at(1, 1) == 1);

    auto ext = exterior(2, 2);  // g = 1 cohomology
    RingElement omega = RingElement::generator(ext, 0) * RingElement::generator(ext, 1);
    auto mw = mult_operator_matrix(ext, omega, 0);
    REQUIRE(mw.matrix.rows() == 1);
    REQUIRE(mw.matrix.cols() == 1);
    CHECK(mw.matrix.at(0, 0) == 1);

    RingElement mixed = RingElement::one(sym) + RingElement::generator(sym, 0);
    CHECK_THROWS_WITH(mult_operator_matrix(sym, mixed, 0),
                      Catch::Matchers::ContainsSubstring("not homogeneous"));
}

TEST_CASE("expression parser round trips") {
    auto sym = theta_sympow_g2();
    RingElement x = parse_element(sym, "z^2");
    CHECK(x.str() == "-1/2*theta^2 + theta*z");
    CHECK(parse_element(sym, "2*theta - z + 1/2") == RingElement::generator(sym, 0) * Rational(2) -
                                                         RingElement::generator(sym, 1) +
                                                         RingElement::one(sym) * Rational(1, 2));
    CHECK(parse_element(sym, "-theta").str() == "-theta");
    CHECK(parse_element(sym, "3/6*theta*z*theta").str() == "1/2*theta^2*z");
    CHECK_THROWS_AS(parse_element(sym, "q"), std::invalid_argument);
    CHECK_THROWS_AS(parse_element(sym, "1 +"), std::invalid_argument);
    CHECK_THROWS_AS(parse_element(sym, ""), std::invalid_argument);

    std::mt19937 rng(5150);
    for (int trial = 0; trial < 20; ++trial) {
        int p = trial % 4;
        RingElement e = random_homogeneous(sym, p, rng);
        CHECK(parse_element(sym, e.str()) == e);
    }
}

TEST_CASE("algebra properties on random elements") {
    std::mt19937 rng(777);
    auto sym = theta_sympow_g2();
    auto ext = exterior(4, 4);
    for (int trial = 0; trial < 15; ++trial) {
        RingElement a = random_homogeneous(sym, trial % 3, rng);
        RingElement b = random_homogeneous(sym, (trial + 1) % 3, rng);
        RingElement c = random_homogeneous(sym, 1, rng);
        CHECK(normal_form(a) == a);  // idempotent
        CHECK((a * b) == (b * a));
        CHECK(((a * b) * c) == (a * (b * c)));
        if (!(a * b).is_zero()) {
            REQUIRE(a.codim());
            REQUIRE(b.codim());
            CHECK(*(a * b).codim() == *a.codim() + *b.codim());
        }

        RingElement u = random_homogeneous(ext, 1, rng);
        RingElement v = random_homogeneous(ext, 1, rng);
        RingElement w = random_homogeneous(ext, 2, rng);
        CHECK((u * v) == -(v * u));      // odd-odd anticommute
        CHECK((u * w) == (w * u));       // odd-even commute
        CHECK(((u * v) * w) == (u * (v * w)));
        CHECK((u * u).is_zero());
    }
}

TEST_CASE("mixed presentations are rejected") {
    auto a = projective_space(3), b = projective_space(3);
    RingElement x = RingElement::generator(a, 0), y = RingElement::generator(b, 0);
    CHECK_THROWS_WITH(x * y, Catch::Matchers::ContainsSubstring("different presentations"));
    CHECK_THROWS_AS(x + y, std::invalid_argument);
}
