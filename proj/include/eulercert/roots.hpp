#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "eulercert/intpoly.hpp"
#include "eulercert/poly.hpp"
#include "eulercert/squarefree.hpp"
#include "eulercert/sturm.hpp"

namespace eulercert {

// One isolated real algebraic number: the unique root of the square-free
// `factor` inside the closed interval [lo, hi]. A rational root is stored
// with lo == hi; otherwise the root is interior and factor changes sign
// across the interval, which keeps refinement to one sign evaluation.
struct RealRoot {
    intpoly::ZPoly factor;
    Rational lo, hi;
    int multiplicity = 1;

    bool is_exact() const { return lo == hi; }

    Rational width() const { return hi - lo; }
};

enum class RootOrder { Less, Equal, Greater };

inline RootOrder flip(RootOrder o) {
    if (o == RootOrder::Less) return RootOrder::Greater;
    if (o == RootOrder::Greater) return RootOrder::Less;
    return RootOrder::Equal;
}

// Halve the interval (or collapse it onto a rational midpoint hit).
inline void refine_step(RealRoot& r) {
    if (r.is_exact()) return;
    Rational mid = (r.lo + r.hi) / 2;
    int const sm = intpoly::sign_at(r.factor, mid);
    if (sm == 0) {
        r.lo = mid;
        r.hi = mid;
        return;
    }
    if (sm == intpoly::sign_at(r.factor, r.lo))
        r.lo = std::move(mid);
    else
        r.hi = std::move(mid);
}

// Where the isolated root stands relative to a rational point.
inline RootOrder compare_with_point(RealRoot& r, Rational const& x) {
    if (r.is_exact()) {
        if (r.lo < x) return RootOrder::Less;
        if (r.lo > x) return RootOrder::Greater;
        return RootOrder::Equal;
    }
    if (x <= r.lo) return RootOrder::Greater;  // interior root exceeds lo
    if (x >= r.hi) return RootOrder::Less;
    int const sx = intpoly::sign_at(r.factor, x);
    if (sx == 0) {
        r.lo = x;
        r.hi = x;
        return RootOrder::Equal;
    }
    return sx == intpoly::sign_at(r.factor, r.lo) ? RootOrder::Greater : RootOrder::Less;
}

// Whether the two roots are known apart from the intervals alone. A shared
// endpoint separates as well, except between two exact equal points: a
// non-exact root is strictly interior to its interval, so it cannot sit on
// the boundary it shares with a neighbor.
inline bool separated(RealRoot const& a, RealRoot const& b) {
    if (a.hi < b.lo || b.hi < a.lo) return true;
    bool const both_exact = a.is_exact() && b.is_exact();
    return (a.hi == b.lo || b.hi == a.lo) && !both_exact;
}

// Exact comparison of two isolated algebraic numbers. Equality is decided
// through the gcd of the factors before any refinement happens, so shared
// roots terminate; distinct roots separate after finitely many halvings.
inline RootOrder compare_roots(RealRoot& a, RealRoot& b) {
    if (a.is_exact()) return flip(compare_with_point(b, a.lo));
    if (b.is_exact()) return compare_with_point(a, b.lo);

    if (!separated(a, b)) {
        intpoly::ZPoly g = intpoly::gcd(a.factor, b.factor);
        if (intpoly::degree(g) >= 1) {
            Rational const klo = std::max(a.lo, b.lo);
            Rational const khi = std::min(a.hi, b.hi);
            if (intpoly::sign_at(g, klo) == 0) {
                a.lo = a.hi = klo;
                b.lo = b.hi = klo;
                return RootOrder::Equal;
            }
            if (intpoly::sign_at(g, khi) == 0) {
                a.lo = a.hi = khi;
                b.lo = b.hi = khi;
                return RootOrder::Equal;
            }
            if (klo < khi && SturmChain(g).count_open(klo, khi) >= 1) return RootOrder::Equal;
        }
        while (!separated(a, b)) {
            refine_step(a);
            refine_step(b);
            if (a.is_exact()) return flip(compare_with_point(b, a.lo));
            if (b.is_exact()) return compare_with_point(a, b.lo);
        }
    }
    return a.hi <= b.lo ? RootOrder::Less : RootOrder::Greater;
}

// All real roots, multiplicity-aware, ordered by decreasing root value with
// pairwise disjoint intervals.
struct RootList {
    std::vector<RealRoot> roots;

    int total_multiplicity() const {
        int t = 0;
        for (auto const& r : roots) t += r.multiplicity;
        return t;
    }
};

namespace detail {

// Roots of one square-free primitive factor via Sturm bisection on
// (-bound, bound). Exact rational roots surface when a midpoint evaluates
// to zero.
inline void isolate_squarefree(intpoly::ZPoly const& f, int multiplicity, std::vector<RealRoot>& out) {
    SturmChain const chain(f);
    if (intpoly::degree(f) < 1) return;
    Rational const bound(intpoly::root_bound(f));

    struct Span {
        Rational lo, hi;
    };
    std::vector<Span> work{{-bound, bound}};
    while (!work.empty()) {
        Span s = std::move(work.back());
        work.pop_back();
        int const count = chain.count_open(s.lo, s.hi);
        if (count == 0) continue;
        if (count == 1) {
            out.push_back(RealRoot{f, s.lo, s.hi, multiplicity});
            continue;
        }
        Rational mid = (s.lo + s.hi) / 2;
        if (intpoly::sign_at(f, mid) != 0) {
            work.push_back({s.lo, mid});
            work.push_back({mid, s.hi});
            continue;
        }
        out.push_back(RealRoot{f, mid, mid, multiplicity});
        // shrink a symmetric gap around the exact root until it holds no
        // other root, then recurse on the two sides
        Rational delta = (s.hi - s.lo) / 4;
        for (;;) {
            Rational const glo = mid - delta;
            Rational const ghi = mid + delta;
            if (intpoly::sign_at(f, glo) != 0 && intpoly::sign_at(f, ghi) != 0 &&
                chain.count_open(glo, ghi) == 1) {
                work.push_back({s.lo, glo});
                work.push_back({ghi, s.hi});
                break;
            }
            delta /= 2;
        }
    }
}

}  // namespace detail

// Complete ordered root list of p (empty for constants). Total multiplicity
// equals the number of real roots of p counted with multiplicity.
inline RootList isolate_roots(Poly const& p) {
    if (p.is_zero()) throw std::domain_error("isolate_roots: zero polynomial");
    RootList list;
    if (p.degree() < 1) return list;
    for (auto const& [factor, mult] : squarefree_decomposition(p)) {
        auto const zf = intpoly::from_poly(factor).first;
        detail::isolate_squarefree(zf, mult, list.roots);
    }
    // insertion sort with exact comparisons; factors of one polynomial are
    // coprime, so Equal cannot occur here
    for (std::size_t i = 1; i < list.roots.size(); ++i)
        for (std::size_t j = i; j > 0 && compare_roots(list.roots[j - 1], list.roots[j]) == RootOrder::Less; --j)
            std::swap(list.roots[j - 1], list.roots[j]);
    for (std::size_t i = 1; i < list.roots.size(); ++i)
        while (!separated(list.roots[i - 1], list.roots[i])) {
            refine_step(list.roots[i - 1]);
            refine_step(list.roots[i]);
        }
    return list;
}

// Multiplicity-weighted number of roots of f in [x0, +inf).
inline int nf_at(Poly const& f, Rational const& x0) {
    if (f.is_zero()) throw std::domain_error("nf_at: zero polynomial");
    RootList list = isolate_roots(f);
    int count = 0;
    for (auto& r : list.roots)
        if (compare_with_point(r, x0) != RootOrder::Less) count += r.multiplicity;
    return count;
}

}  // namespace eulercert
