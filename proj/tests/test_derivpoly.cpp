#include <catch2/catch_amalgamated.hpp>

#include "eulercert/derivpoly.hpp"
#include "eulercert/eulerian.hpp"
#include "eulercert/mobius.hpp"
#include "eulercert/series.hpp"

using namespace eulercert;

TEST_CASE("tanh derivative polynomials", "[derivpoly]") {
    CHECK(tanh_derivative_poly(0) == Poly{0, 1});
    CHECK(tanh_derivative_poly(1) == Poly{1, 0, -1});
    CHECK(tanh_derivative_poly(2) == Poly{0, -2, 0, 2});
    CHECK(tanh_derivative_poly(3) == Poly{-2, 0, 8, 0, -6});
    CHECK(tanh_derivative_poly(4) == Poly{0, 16, 0, -40, 0, 24});
}

TEST_CASE("sech derivative polynomials", "[derivpoly]") {
    CHECK(sech_derivative_poly(0) == Poly{1});
    CHECK(sech_derivative_poly(1) == Poly{0, -1});
    CHECK(sech_derivative_poly(2) == Poly{-1, 0, 2});
    CHECK(sech_derivative_poly(3) == Poly{0, 5, 0, -6});
    CHECK(sech_derivative_poly(4) == Poly{5, 0, -28, 0, 24});
}

TEST_CASE("degree and leading coefficient pattern", "[derivpoly]") {
    for (int n = 1; n <= 12; ++n) {
        Poly p = tanh_derivative_poly(n);
        CHECK(p.degree() == n + 1);
        Rational lead = Rational(factorial(n));
        CHECK(p.leading() == ((n % 2 == 0) ? lead : -lead));
        CHECK(sech_derivative_poly(n).degree() == n);
    }
}

TEST_CASE("parity of exponents", "[derivpoly]") {
    for (int n = 0; n <= 14; ++n) {
        Poly const p = tanh_derivative_poly(n);
        for (int i = 0; i <= p.degree(); ++i)
            if (i % 2 != (n + 1) % 2) CHECK(p.coeff(i) == 0);
        Poly const q = sech_derivative_poly(n);
        for (int i = 0; i <= q.degree(); ++i)
            if (i % 2 != n % 2) CHECK(q.coeff(i) == 0);
    }
}

TEST_CASE("transformed families", "[derivpoly]") {
    CHECK(transformed_eulerian(CoxeterType::A, 1) == Poly{-1, 0, 1});
    CHECK(transformed_eulerian(CoxeterType::B, 2) == Poly{-4, 0, 8});
    CHECK(transformed_eulerian(CoxeterType::D, 2) == Poly{0, 0, 1});
    CHECK(transformed_eulerian(CoxeterType::D, 3) == Poly{0, -2, 0, 3});
    CHECK(transformed_eulerian(CoxeterType::D, 4) == Poly{1, 0, -12, 0, 12});
    CHECK(transformed_eulerian(CoxeterType::D, 5) == Poly{0, 21, 0, -80, 0, 60});
    CHECK(transformed_eulerian(CoxeterType::D, 6) == Poly{-13, 0, 254, 0, -600, 0, 360});
    CHECK_THROWS_AS(transformed_eulerian(CoxeterType::D, 1), std::domain_error);
    CHECK_THROWS_AS(transformed_eulerian(CoxeterType::D, 0), std::domain_error);
}

TEST_CASE("first-order recurrences give the same families", "[derivpoly]") {
    for (int n = 0; n <= 30; ++n) {
        CAPTURE(n);
        CHECK(detail::transformed_a_by_recurrence(n) == transformed_eulerian(CoxeterType::A, n));
        CHECK(detail::transformed_b_by_recurrence(n) == transformed_eulerian(CoxeterType::B, n));
    }
}

TEST_CASE("the two routes to the type D transform agree", "[derivpoly]") {
    for (int n = 2; n <= 30; ++n) {
        CAPTURE(n);
        Poly via_identity = detail::transformed_d_by_identity(
            n, transformed_eulerian(CoxeterType::A, n - 1), transformed_eulerian(CoxeterType::B, n));
        CHECK(via_identity == detail::transformed_d_by_derivative_polys(n));
    }
}

TEST_CASE("transform round trip against the Cayley substitution", "[derivpoly]") {
    for (int n = 1; n <= 12; ++n) {
        CAPTURE(n);
        Poly a_direct = mobius_compose(eulerian_fast(CoxeterType::A, n), MobiusMap::cayley(), n + 1);
        CHECK(a_direct == transformed_eulerian(CoxeterType::A, n));
        Poly b_direct = mobius_compose(eulerian_fast(CoxeterType::B, n), MobiusMap::cayley(), n);
        CHECK(b_direct == transformed_eulerian(CoxeterType::B, n));
        if (n >= 2) {
            Poly d_direct = mobius_compose(eulerian_fast(CoxeterType::D, n), MobiusMap::cayley(), n) /
                            detail::pow2(n);
            CHECK(d_direct == transformed_eulerian(CoxeterType::D, n));
        }
    }
}

TEST_CASE("transformed values at -1 alternate", "[derivpoly]") {
    for (int n = 2; n <= 20; ++n) {
        Rational v = transformed_eulerian(CoxeterType::D, n)(Rational(-1));
        CHECK(v == (n % 2 == 0 ? 1 : -1));
    }
}
