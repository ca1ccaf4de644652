#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "eulercert/coxeter.hpp"
#include "eulercert/derivpoly.hpp"
#include "eulercert/errors.hpp"
#include "eulercert/mobius.hpp"
#include "eulercert/poly.hpp"

namespace eulercert {

// Signed permutation in window (one-line) notation: window[i-1] = pi(i),
// the absolute values form a permutation of 1..n, signs are free. Plain
// permutations are the all-positive case.
struct SignedPerm {
    std::vector<int> window;

    int size() const { return static_cast<int>(window.size()); }

    int negatives() const {
        return static_cast<int>(std::count_if(window.begin(), window.end(), [](int v) { return v < 0; }));
    }

    void validate() const {
        int const n = size();
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        for (int v : window) {
            int const a = v < 0 ? -v : v;
            if (a < 1 || a > n || seen[static_cast<std::size_t>(a)])
                throw std::invalid_argument("signed permutation: window is not a signed arrangement of 1..n");
            seen[static_cast<std::size_t>(a)] = true;
        }
    }
};

inline constexpr int kDefaultBruteCap = 10;

namespace detail {

inline void check_budget(CoxeterType t, int n, int brute_cap) {
    int const min_n = (t == CoxeterType::D) ? 2 : 1;
    if (n < min_n)
        throw std::invalid_argument("enumerate: type " + to_string(t) + " needs n >= " + std::to_string(min_n));
    if (n > brute_cap)
        throw capacity_error("enumerate: n = " + std::to_string(n) + " exceeds the brute-force cap " +
                             std::to_string(brute_cap));
}

}  // namespace detail

// Streams every element of the chosen group exactly once, in lexicographic
// order of (absolute permutation, sign mask). The callback receives the
// window vector; it must not hold on to the reference.
template <typename Visit>
void for_each_element(CoxeterType t, int n, int brute_cap, Visit&& visit) {
    detail::check_budget(t, n, brute_cap);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<int> window(static_cast<std::size_t>(n));
    std::uint64_t const mask_end = (t == CoxeterType::A) ? 1 : (std::uint64_t{1} << n);
    do {
        for (std::uint64_t mask = 0; mask < mask_end; ++mask) {
            if (t == CoxeterType::D && (__builtin_popcountll(mask) & 1)) continue;
            for (int i = 0; i < n; ++i)
                window[static_cast<std::size_t>(i)] =
                    (mask >> i) & 1 ? -perm[static_cast<std::size_t>(i)] : perm[static_cast<std::size_t>(i)];
            visit(static_cast<std::vector<int> const&>(window));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

template <typename Visit>
void for_each_element(CoxeterType t, int n, Visit&& visit) {
    for_each_element(t, n, kDefaultBruteCap, std::forward<Visit>(visit));
}

inline std::vector<SignedPerm> group_elements(CoxeterType t, int n, int brute_cap = kDefaultBruteCap) {
    std::vector<SignedPerm> out;
    for_each_element(t, n, brute_cap, [&](std::vector<int> const& w) { out.push_back(SignedPerm{w}); });
    return out;
}

namespace detail {

// Descent statistic on a raw window. Boundary convention: type A compares
// within the window only; type B prepends pi(0) = 0; type D prepends
// pi(0) = -pi(2).
inline int descents_window(CoxeterType t, std::vector<int> const& w) {
    int const n = static_cast<int>(w.size());
    int des = 0;
    if (t == CoxeterType::B) {
        if (0 > w[0]) ++des;
    } else if (t == CoxeterType::D) {
        if (-w[1] > w[0]) ++des;
    }
    for (int i = 1; i < n; ++i)
        if (w[static_cast<std::size_t>(i - 1)] > w[static_cast<std::size_t>(i)]) ++des;
    return des;
}

}  // namespace detail

inline int descent_count(CoxeterType t, SignedPerm const& pi) {
    pi.validate();
    if (t == CoxeterType::A) {
        for (int v : pi.window)
            if (v < 0) throw std::invalid_argument("descent_count: type A takes unsigned permutations");
    }
    if (t == CoxeterType::D) {
        if (pi.size() < 2) throw std::invalid_argument("descent_count: type D needs n >= 2");
        if (pi.negatives() % 2 != 0)
            throw std::invalid_argument("descent_count: odd number of negative entries is not a type D element");
    }
    return detail::descents_window(t, pi.window);
}

// Descent-generating polynomial by full enumeration. Type A carries the
// extra factor x (exponent des+1) and the conventions A_0 = x, B_0 = 1,
// D_0 = D_1 = 1 cover the ranks below the statistic's reach.
inline Poly eulerian_brute(CoxeterType t, int n, int brute_cap = kDefaultBruteCap) {
    if (n < 0) throw std::invalid_argument("eulerian_brute: negative rank");
    if (t == CoxeterType::A && n == 0) return Poly::identity();
    if (t == CoxeterType::B && n == 0) return Poly::constant(Rational(1));
    if (t == CoxeterType::D && n <= 1) return Poly::constant(Rational(1));
    std::vector<std::uint64_t> hist(static_cast<std::size_t>(n) + 1, 0);
    for_each_element(t, n, brute_cap,
                     [&](std::vector<int> const& w) { ++hist[static_cast<std::size_t>(detail::descents_window(t, w))]; });
    std::vector<Rational> coeffs;
    if (t == CoxeterType::A) coeffs.emplace_back(0);  // exponent shift des -> des+1
    for (auto c : hist) coeffs.emplace_back(static_cast<unsigned long>(c));
    return Poly(std::move(coeffs));
}

// Same polynomials with no group enumeration: the tanh/sech derivative
// polynomials are transformed back through the inverse Cayley substitution,
// and type D is assembled from the Stembridge identity
// D_n = B_n - n 2^(n-1) A_{n-1}.
inline Poly eulerian_fast(CoxeterType t, int n) {
    if (n < 0) throw std::invalid_argument("eulerian_fast: negative rank");
    switch (t) {
        case CoxeterType::A: {
            if (n == 0) return Poly::identity();
            Poly a = transformed_eulerian(CoxeterType::A, n);
            Poly res = mobius_compose(a, MobiusMap::cayley_inverse(), n + 1);
            return res / Rational(Integer(1) << (n + 1));
        }
        case CoxeterType::B: {
            if (n == 0) return Poly::constant(Rational(1));
            Poly b = transformed_eulerian(CoxeterType::B, n);
            Poly res = mobius_compose(b, MobiusMap::cayley_inverse(), n);
            return res / Rational(Integer(1) << n);
        }
        case CoxeterType::D: {
            if (n <= 1) return Poly::constant(Rational(1));
            Poly bn = eulerian_fast(CoxeterType::B, n);
            Poly an1 = eulerian_fast(CoxeterType::A, n - 1);
            return bn - Rational(Integer(n) << (n - 1)) * an1;
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace eulercert
