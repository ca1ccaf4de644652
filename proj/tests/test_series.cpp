#include <catch2/catch_amalgamated.hpp>

#include "eulercert/series.hpp"

using namespace eulercert;

TEST_CASE("tangent series", "[series]") {
    auto t = tan_series(5);
    CHECK(t.coeff(0) == 0);
    CHECK(t.coeff(1) == 1);
    CHECK(t.coeff(2) == 0);
    CHECK(t.coeff(3) == make_rational(1, 3));
    CHECK(t.coeff(4) == 0);
    CHECK(t.coeff(5) == make_rational(2, 15));
}

TEST_CASE("hyperbolic series", "[series]") {
    auto th = tanh_series(3);
    CHECK(th.coeff(1) == 1);
    CHECK(th.coeff(3) == make_rational(-1, 3));
    auto sh = sech_series(0);
    CHECK(sh.coeff(0) == 1);
    sh = sech_series(6);
    CHECK(sh.coeff(2) == make_rational(-1, 2));
    CHECK(sh.coeff(4) == make_rational(5, 24));
    CHECK(sh.coeff(6) == make_rational(-61, 720));
}

TEST_CASE("series division requires a unit", "[series]") {
    CHECK_THROWS_AS(TruncatedSeries::one(4) / sin_series(4), std::domain_error);
}

TEST_CASE("series arithmetic truncates to the smaller order", "[series]") {
    auto a = sin_series(8);
    auto b = cos_series(5);
    CHECK((a * b).order() == 5);
    CHECK((a + b).order() == 5);
}

TEST_CASE("argument scaling", "[series]") {
    auto s = sech_series(4).scale_argument(Rational(2));
    CHECK(s.coeff(2) == make_rational(-4, 2));   // 4 * (-1/2)
    CHECK(s.coeff(4) == make_rational(80, 24));  // 16 * (5/24)
}

TEST_CASE("order-k tangent and secant numbers", "[series]") {
    CHECK(tangent_number(3, 1) == 2);
    CHECK(secant_number(4, 0) == 5);
    CHECK(tangent_number(2, 1) == 0);
    CHECK(tangent_number(0, 0) == 1);
    CHECK(secant_number(0, 0) == 1);
    CHECK_THROWS_AS(tangent_number(2, 3), std::invalid_argument);
}

TEST_CASE("parity vanishing of the classical rows", "[series]") {
    for (int n = 1; n <= 16; ++n) {
        if (n % 2 == 0) CHECK(tangent_number(n, 1) == 0);
        if (n % 2 == 1) CHECK(secant_number(n, 0) == 0);
        if (n % 2 == 1) CHECK(tangent_number(n, 1) != 0);
        if (n % 2 == 0) CHECK(secant_number(n, 0) != 0);
    }
}

TEST_CASE("order-k numbers are integers across the triangle", "[series]") {
    // exponential_coefficient throws logic_error on a fractional value, so
    // evaluating is the assertion.
    for (int n = 0; n <= 12; ++n)
        for (int k = 0; k <= n; ++k) {
            CHECK_NOTHROW(tangent_number(n, k));
            CHECK_NOTHROW(secant_number(n, k));
        }
}
