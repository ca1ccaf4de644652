#include <catch2/catch_amalgamated.hpp>

#include "eulercert/mobius.hpp"
#include "eulercert/poly.hpp"
#include "eulercert/rational.hpp"
#include "eulercert/squarefree.hpp"
#include "test_util.hpp"

using namespace eulercert;

TEST_CASE("rational construction and canonical form", "[poly]") {
    Rational q = make_rational(6, -4);
    CHECK(q.get_num() == -3);
    CHECK(q.get_den() == 2);
    CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
    CHECK(sign_of(make_rational(-7, 3)) == -1);
    CHECK(sign_of(Rational(0)) == 0);
}

TEST_CASE("addition", "[poly]") {
    CHECK(Poly{1, 2, 1} + Poly{0, -4} == Poly{1, -2, 1});
    Poly p{3, 0, 5};
    CHECK(p + Poly::zero() == p);
    CHECK(Poly{-1, 0, 1} + Poly{1, 0, -1} == Poly::zero());
    CHECK((Poly{-1, 0, 1} + Poly{1, 0, -1}).degree() == -1);
}

TEST_CASE("multiplication", "[poly]") {
    CHECK(Poly{1, 1} * Poly{1, 1} == Poly{1, 2, 1});
    Poly p{2, -3, 0, 7};
    CHECK(p * Poly::constant(Rational(1)) == p);
    // x * (3x^2 - 2) rebuilds 3x^3 - 2x
    CHECK(Poly{0, 1} * Poly{-2, 0, 3} == Poly{0, -2, 0, 3});
}

TEST_CASE("derivative", "[poly]") {
    CHECK(Poly{0, 1}.derivative() == Poly{1});
    Poly one_minus_sq{1, 0, -1};
    CHECK(one_minus_sq.derivative() == Poly{0, -2});
    CHECK(one_minus_sq * one_minus_sq.derivative() == Poly{0, -2, 0, 2});
    CHECK(Poly{42}.derivative() == Poly::zero());
    CHECK(Poly::zero().derivative() == Poly::zero());
}

TEST_CASE("evaluation", "[poly]") {
    Poly d4{1, 0, -12, 0, 12};
    CHECK(d4(Rational(-1)) == 1);
    Poly d6{-13, 0, 254, 0, -600, 0, 360};
    CHECK(d6(Rational(0)) == -13);
    Poly p{5, 7, -2};
    CHECK(p(Rational(0)) == p.coeff(0));
    CHECK(p(make_rational(1, 2)) == make_rational(16, 2));
}

TEST_CASE("zero polynomial conventions", "[poly]") {
    CHECK(Poly::zero().degree() == -1);
    CHECK(Poly::zero().is_zero());
    CHECK_THROWS_AS(Poly::zero().leading(), std::domain_error);
    CHECK(Poly::constant(Rational(0)) == Poly::zero());
}

TEST_CASE("mobius composition examples", "[poly]") {
    Poly const d2_target{0, 0, 1};
    Poly composed = mobius_compose(Poly{1, 2, 1}, MobiusMap::cayley(), 2);
    CHECK(composed * make_rational(1, 4) == d2_target);

    Poly p{3, -1, 4, 1};
    CHECK(mobius_compose(p, MobiusMap::identity(), p.degree()) == p);

    Poly composed3 = mobius_compose(Poly{1, 11, 11, 1}, MobiusMap::cayley(), 3);
    CHECK(composed3 * make_rational(1, 8) == Poly{0, -2, 0, 3});

    CHECK_THROWS_AS(mobius_compose(p, MobiusMap{Rational(1), Rational(2), Rational(2), Rational(4)}, 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(mobius_compose(p, MobiusMap::cayley(), 2), std::invalid_argument);
}

TEST_CASE("mobius round trip is proportional to the identity", "[poly]") {
    SplitMix64 rng(0x5eed0001);
    MobiusMap const maps[] = {
        MobiusMap::cayley(),
        {Rational(2), Rational(1), Rational(1), Rational(1)},
        {Rational(0), Rational(1), Rational(1), Rational(0)},  // x -> 1/x
        {Rational(3), Rational(-2), Rational(0), Rational(1)},
    };
    for (int iter = 0; iter < 24; ++iter) {
        Poly p = testutil::rand_nonzero_poly(rng, 7);
        MobiusMap const& m = maps[iter % 4];
        int const hom = p.degree();
        Poly q = mobius_compose(p, m, hom);
        Poly back = mobius_compose(q, m.inverse(), hom);
        Rational c = m.det();
        Rational scale(1);
        for (int i = 0; i < hom; ++i) scale *= c;
        REQUIRE(back == scale * p);
    }
}

TEST_CASE("degree is additive and addition cancels", "[poly]") {
    SplitMix64 rng(0x5eed0002);
    for (int iter = 0; iter < 40; ++iter) {
        Poly p = testutil::rand_nonzero_poly(rng, 6);
        Poly q = testutil::rand_nonzero_poly(rng, 6);
        REQUIRE((p * q).degree() == p.degree() + q.degree());
        REQUIRE((p + q) - q == p);
    }
}

TEST_CASE("difference quotient agrees with the derivative to first order", "[poly]") {
    // p(x0+h) - p(x0) = h p'(x0) + h^2 (...), so with C one more than the sum
    // of |p^(k)(x0)|/k! the bound |DQ - p'(x0)| <= C h holds for h <= 1 and is
    // checkable in exact arithmetic.
    SplitMix64 rng(0x5eed0003);
    std::vector<Poly> samples = {Poly{1, 0, -12, 0, 12}, Poly{-2, 0, 8, 0, -6}};
    for (int iter = 0; iter < 6; ++iter) samples.push_back(testutil::rand_nonzero_poly(rng, 6));
    for (auto const& p : samples) {
        Rational const x0 = make_rational(1, 3);
        Rational c(1);
        {
            Poly dk = p.derivative().derivative();
            Rational kfact(2);
            for (int k = 2; !dk.is_zero(); ++k) {
                c += rational_abs(dk(x0)) / kfact;
                dk = dk.derivative();
                kfact *= k + 1;
            }
        }
        Rational const dpx0 = p.derivative()(x0);
        for (long den : {10L, 100L, 1000L}) {
            Rational const h = make_rational(1, den);
            Rational const dq = (p(x0 + h) - p(x0)) / h;
            REQUIRE(rational_abs(dq - dpx0) <= c * h);
        }
    }
}

TEST_CASE("square-free decomposition examples", "[poly]") {
    auto dec = squarefree_decomposition(Poly{0, 0, 1});
    REQUIRE(dec.size() == 1);
    CHECK(dec[0].first == Poly{0, 1});
    CHECK(dec[0].second == 2);

    dec = squarefree_decomposition(Poly{0, -2, 0, 3});
    REQUIRE(dec.size() == 1);
    CHECK(dec[0].first == Poly{0, -2, 0, 3});
    CHECK(dec[0].second == 1);

    dec = squarefree_decomposition(Poly{1, 2, 1});
    REQUIRE(dec.size() == 1);
    CHECK(dec[0].first == Poly{1, 1});
    CHECK(dec[0].second == 2);

    CHECK_THROWS_AS(squarefree_decomposition(Poly::zero()), std::domain_error);
}

TEST_CASE("square-free decomposition properties", "[poly]") {
    SplitMix64 rng(0x5eed0004);
    for (int iter = 0; iter < 20; ++iter) {
        // Build p with known repeated structure from random split factors.
        auto [f1, r1] = testutil::rand_split_poly(rng, 3, 6, 3);
        auto [f2, r2] = testutil::rand_split_poly(rng, 3, 6, 3);
        Poly p = f1 * f2 * f2;
        auto dec = squarefree_decomposition(p);
        int weighted = 0;
        Poly prod = Poly::constant(Rational(1));
        for (auto const& [factor, mult] : dec) {
            weighted += mult * factor.degree();
            CHECK(poly_gcd(factor, factor.derivative()).degree() == 0);
            for (int i = 0; i < mult; ++i) prod *= factor;
        }
        REQUIRE(weighted == p.degree());
        // reconstruction up to a rational constant
        REQUIRE(prod * Poly::constant(p.leading() / prod.leading()) == p);
    }
}

TEST_CASE("poly pretty printer", "[poly]") {
    CHECK(Poly{0, -2, 0, 3}.str() == "3*x^3 - 2*x");
    CHECK(Poly::zero().str() == "0");
    CHECK(Poly{1}.str() == "1");
    CHECK(Poly(std::vector<Rational>{make_rational(1, 2), Rational(-1)}).str() == "-x + 1/2");
}
