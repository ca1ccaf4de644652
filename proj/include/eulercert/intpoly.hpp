#pragma once

#include <cassert>
#include <stdexcept>
#include <utility>
#include <vector>

#include "eulercert/poly.hpp"
#include "eulercert/rational.hpp"

// Primitive integer polynomials: the workhorse layer under gcd, square-free
// decomposition and Sturm chains. Pseudo-remainder sequences over Z avoid
// the fraction blowup a naive rational Euclid run exhibits past degree 20.
namespace eulercert::intpoly {

using ZPoly = std::vector<Integer>;  // coefficient of x^i at index i, trailing zeros trimmed

inline void trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int degree(ZPoly const& p) { return static_cast<int>(p.size()) - 1; }
inline bool is_zero(ZPoly const& p) { return p.empty(); }

inline Integer content(ZPoly const& p) {
    Integer g(0);
    for (auto const& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;  // 0 for the zero polynomial, positive otherwise
}

// Divide out the content; sign of the leading coefficient is preserved.
inline ZPoly primitive(ZPoly p) {
    Integer g = content(p);
    if (g > 1)
        for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return p;
}

inline ZPoly negate(ZPoly p) {
    for (auto& c : p) c = -c;
    return p;
}

inline ZPoly derivative(ZPoly const& p) {
    ZPoly r;
    if (p.size() <= 1) return r;
    r.reserve(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * static_cast<long>(i));
    trim(r);
    return r;
}

// Pseudo-remainder of a by b, scaled so the result is a POSITIVE rational
// multiple of the true remainder rem(a, b). Keeping the sign straight is what
// lets Sturm chains use this directly.
inline ZPoly prem_signed(ZPoly a, ZPoly const& b) {
    if (is_zero(b)) throw std::domain_error("prem: division by zero polynomial");
    int const db = degree(b);
    Integer const& lb = b.back();
    unsigned steps = 0;
    while (degree(a) >= db) {
        int const da = degree(a);
        Integer la = a.back();
        for (auto& c : a) c *= lb;
        for (int i = 0; i <= db; ++i)
            a[static_cast<std::size_t>(da - db + i)] -= la * b[static_cast<std::size_t>(i)];
        trim(a);
        ++steps;
    }
    if (sign_of(lb) < 0 && (steps & 1u)) a = negate(std::move(a));
    return a;
}

// Primitive PRS gcd; result is primitive with positive leading coefficient.
inline ZPoly gcd(ZPoly a, ZPoly b) {
    if (is_zero(a)) std::swap(a, b);
    if (is_zero(b)) {
        a = primitive(std::move(a));
        if (!a.empty() && sign_of(a.back()) < 0) a = negate(std::move(a));
        return a;
    }
    if (degree(a) < degree(b)) std::swap(a, b);
    a = primitive(std::move(a));
    b = primitive(std::move(b));
    while (true) {
        ZPoly r = prem_signed(a, b);
        if (is_zero(r)) break;
        a = std::move(b);
        b = primitive(std::move(r));
    }
    if (sign_of(b.back()) < 0) b = negate(std::move(b));
    return b;
}

// Exact quotient a/b for b | a (Gauss: integral since b is primitive).
inline ZPoly divexact(ZPoly const& a, ZPoly const& b) {
    if (is_zero(b)) throw std::domain_error("divexact: division by zero polynomial");
    if (is_zero(a)) return {};
    int const da = degree(a), db = degree(b);
    if (da < db) throw std::domain_error("divexact: not divisible");
    ZPoly rem = a;
    ZPoly q(static_cast<std::size_t>(da - db) + 1, Integer(0));
    Integer const& lb = b.back();
    for (int k = da - db; k >= 0; --k) {
        if (degree(rem) != k + db) continue;  // coefficient already zero
        Integer qc;
        mpz_divexact(qc.get_mpz_t(), rem.back().get_mpz_t(), lb.get_mpz_t());
        for (int i = 0; i <= db; ++i)
            rem[static_cast<std::size_t>(k + i)] -= qc * b[static_cast<std::size_t>(i)];
        trim(rem);
        q[static_cast<std::size_t>(k)] = std::move(qc);
    }
    if (!is_zero(rem)) throw std::domain_error("divexact: not divisible");
    trim(q);
    return q;
}

// sign of p(a/b) via the homogeneous form sum p_i a^i b^(d-i); all-integer.
inline int sign_at(ZPoly const& p, Rational const& x) {
    if (is_zero(p)) return 0;
    Integer const& a = x.get_num();
    Integer const& b = x.get_den();  // > 0
    Integer acc = p.back();
    Integer bpow(1);
    for (std::size_t i = p.size() - 1; i-- > 0;) {
        bpow *= b;
        acc *= a;
        acc += p[i] * bpow;
    }
    return sign_of(acc);
}

inline int sign_at_pos_inf(ZPoly const& p) { return is_zero(p) ? 0 : sign_of(p.back()); }

inline int sign_at_neg_inf(ZPoly const& p) {
    if (is_zero(p)) return 0;
    int s = sign_of(p.back());
    return (degree(p) % 2 == 0) ? s : -s;
}

// Square-free part f / gcd(f, f'), primitive, leading coefficient sign kept.
inline ZPoly squarefree_part(ZPoly const& f) {
    if (is_zero(f)) throw std::domain_error("squarefree_part: zero polynomial");
    ZPoly fp = primitive(f);
    if (degree(fp) == 0) return fp;
    ZPoly g = gcd(fp, derivative(fp));
    if (degree(g) == 0) return fp;
    return divexact(fp, g);
}

// Primitive integer image of a rational polynomial; p == scale * result with
// scale > 0, so signs of values are shared.
inline std::pair<ZPoly, Rational> from_poly(Poly const& p) {
    if (p.is_zero()) return {ZPoly{}, Rational(1)};
    Integer den_lcm(1);
    for (auto const& c : p.coeffs())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    ZPoly z;
    z.reserve(p.coeffs().size());
    for (auto const& c : p.coeffs()) {
        Integer t;
        mpz_divexact(t.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        z.push_back(c.get_num() * t);
    }
    Integer g = content(z);
    if (g > 1)
        for (auto& c : z) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return {std::move(z), make_rational(std::move(g), std::move(den_lcm))};
}

inline Poly to_poly(ZPoly const& z) {
    std::vector<Rational> c;
    c.reserve(z.size());
    for (auto const& v : z) c.emplace_back(v);
    return Poly(std::move(c));
}

// Integer N with every real root of p strictly inside (-N, N) (Cauchy bound).
inline Integer root_bound(ZPoly const& p) {
    if (degree(p) < 1) return Integer(1);
    Integer m(0);
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        Integer a = abs(p[i]);
        if (a > m) m = a;
    }
    Integer lc = abs(p.back());
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), m.get_mpz_t(), lc.get_mpz_t());
    return q + 1;
}

}  // namespace eulercert::intpoly
