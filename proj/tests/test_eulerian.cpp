#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "eulercert/eulerian.hpp"
#include "eulercert/series.hpp"

using namespace eulercert;

TEST_CASE("group cardinalities", "[eulerian]") {
    CHECK(group_elements(CoxeterType::A, 3).size() == 6);
    CHECK(group_elements(CoxeterType::B, 2).size() == 8);
    auto d2 = group_elements(CoxeterType::D, 2);
    REQUIRE(d2.size() == 4);
    std::set<std::vector<int>> got;
    for (auto const& e : d2) got.insert(e.window);
    std::set<std::vector<int>> expected = {{1, 2}, {2, 1}, {-1, -2}, {-2, -1}};
    CHECK(got == expected);
}

TEST_CASE("enumeration budget", "[eulerian]") {
    CHECK_THROWS_AS(group_elements(CoxeterType::B, 11), capacity_error);
    CHECK_THROWS_AS(eulerian_brute(CoxeterType::B, 11), capacity_error);
    CHECK_NOTHROW(group_elements(CoxeterType::B, 5, 5));
    CHECK_THROWS_AS(group_elements(CoxeterType::B, 6, 5), capacity_error);
    CHECK_THROWS_AS(group_elements(CoxeterType::D, 1), std::invalid_argument);
}

TEST_CASE("descent counts", "[eulerian]") {
    CHECK(descent_count(CoxeterType::D, SignedPerm{{-1, -2}}) == 2);
    CHECK(descent_count(CoxeterType::A, SignedPerm{{1, 2, 3, 4}}) == 0);
    CHECK(descent_count(CoxeterType::B, SignedPerm{{-1, 2}}) == 1);
    CHECK(descent_count(CoxeterType::B, SignedPerm{{1, 2}}) == 0);
    CHECK_THROWS_AS(descent_count(CoxeterType::D, SignedPerm{{-1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(descent_count(CoxeterType::A, SignedPerm{{-1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(descent_count(CoxeterType::A, SignedPerm{{1, 1}}), std::invalid_argument);
}

TEST_CASE("brute-force distribution polynomials", "[eulerian]") {
    CHECK(eulerian_brute(CoxeterType::D, 3) == Poly{1, 11, 11, 1});
    CHECK(eulerian_brute(CoxeterType::D, 2) == Poly{1, 2, 1});
    CHECK(eulerian_brute(CoxeterType::A, 3) == Poly{0, 1, 4, 1});
    CHECK(eulerian_brute(CoxeterType::B, 2) == Poly{1, 6, 1});
    CHECK(eulerian_brute(CoxeterType::A, 0) == Poly{0, 1});
    CHECK(eulerian_brute(CoxeterType::B, 0) == Poly{1});
    CHECK(eulerian_brute(CoxeterType::D, 0) == Poly{1});
    CHECK(eulerian_brute(CoxeterType::D, 1) == Poly{1});
}

TEST_CASE("fast path equals enumeration", "[eulerian]") {
    for (int n = 0; n <= 6; ++n) {
        CAPTURE(n);
        CHECK(eulerian_fast(CoxeterType::A, n) == eulerian_brute(CoxeterType::A, n));
        CHECK(eulerian_fast(CoxeterType::B, n) == eulerian_brute(CoxeterType::B, n));
        if (n != 1) CHECK(eulerian_fast(CoxeterType::D, n) == eulerian_brute(CoxeterType::D, n));
    }
    CHECK(eulerian_fast(CoxeterType::D, 1) == Poly{1});
    CHECK(eulerian_fast(CoxeterType::A, 1) == Poly{0, 1});
    CHECK(eulerian_fast(CoxeterType::D, 2) == Poly{1, 2, 1});
    CHECK(eulerian_fast(CoxeterType::D, 3) == Poly{1, 11, 11, 1});
}

TEST_CASE("coefficient symmetry", "[eulerian]") {
    for (int n = 2; n <= 12; ++n) {
        Poly const d = eulerian_fast(CoxeterType::D, n);
        Poly const b = eulerian_fast(CoxeterType::B, n);
        Poly const a = eulerian_fast(CoxeterType::A, n);
        for (int k = 0; k <= n; ++k) {
            CHECK(d.coeff(k) == d.coeff(n - k));
            CHECK(b.coeff(k) == b.coeff(n - k));
        }
        for (int k = 1; k <= n; ++k) CHECK(a.coeff(k) == a.coeff(n + 1 - k));
    }
}

TEST_CASE("column sums are the group orders", "[eulerian]") {
    for (int n = 2; n <= 10; ++n) {
        Rational suma(0), sumb(0), sumd(0);
        Poly const a = eulerian_fast(CoxeterType::A, n);
        Poly const b = eulerian_fast(CoxeterType::B, n);
        Poly const d = eulerian_fast(CoxeterType::D, n);
        for (int k = 0; k <= n + 1; ++k) suma += a.coeff(k);
        for (int k = 0; k <= n; ++k) {
            sumb += b.coeff(k);
            sumd += d.coeff(k);
        }
        Rational fact(factorial(n));
        CHECK(suma == fact);
        CHECK(sumb == Rational(Integer(1) << n) * fact);
        CHECK(sumd == Rational(Integer(1) << (n - 1)) * fact);
    }
}

TEST_CASE("type D value at -1 follows the parity sign law", "[eulerian]") {
    for (int n = 3; n <= 14; ++n) {
        Rational v = eulerian_fast(CoxeterType::D, n)(Rational(-1));
        if (n % 2 == 1) {
            CHECK(v == 0);
        } else {
            CHECK(sign_of(v) == ((n / 2) % 2 == 0 ? 1 : -1));
        }
    }
}
