#pragma once

#include <vector>

#include "eulercert/poly.hpp"
#include "eulercert/prng.hpp"
#include "eulercert/rational.hpp"

namespace testutil {

using eulercert::Poly;
using eulercert::Rational;
using eulercert::SplitMix64;

inline Rational rand_rational(SplitMix64& rng, long num_range, long den_range) {
    long num = static_cast<long>(rng.next_below(static_cast<std::uint64_t>(2 * num_range))) - num_range;
    long den = static_cast<long>(rng.next_below(static_cast<std::uint64_t>(den_range - 1))) + 1;
    return eulercert::make_rational(num, den);
}

inline Poly rand_poly(SplitMix64& rng, int max_degree, long coeff_range = 9) {
    int deg = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_degree)));
    std::vector<Rational> c;
    for (int i = 0; i <= deg; ++i) c.push_back(rand_rational(rng, coeff_range, 4));
    return Poly(std::move(c));
}

inline Poly rand_nonzero_poly(SplitMix64& rng, int max_degree, long coeff_range = 9) {
    for (;;) {
        Poly p = rand_poly(rng, max_degree, coeff_range);
        if (!p.is_zero()) return p;
    }
}

// Product of distinct rational linear factors (den*x - num); returns the
// polynomial together with its roots sorted descending.
inline std::pair<Poly, std::vector<Rational>> rand_split_poly(SplitMix64& rng, int max_factors,
                                                              long root_num_range = 40,
                                                              long root_den_range = 8) {
    int const k = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_factors - 1)));
    std::vector<Rational> roots;
    while (static_cast<int>(roots.size()) < k) {
        Rational r = rand_rational(rng, root_num_range, root_den_range);
        bool dup = false;
        for (auto const& s : roots) dup = dup || s == r;
        if (!dup) roots.push_back(r);
    }
    Poly p = Poly::constant(Rational(1));
    for (auto const& r : roots)
        p *= Poly(std::vector<Rational>{Rational(-r.get_num()), Rational(r.get_den())});
    std::sort(roots.begin(), roots.end(), [](Rational const& a, Rational const& b) { return a > b; });
    return {p, roots};
}

}  // namespace testutil
