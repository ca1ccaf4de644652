#pragma once

#include <stdexcept>
#include <string>

#include "eulercert/coxeter.hpp"
#include "eulercert/poly.hpp"

namespace eulercert {

// Polynomials expressing the n-th derivatives of tanh and sech in terms of
// t = tanh(theta):
//   (d/dtheta)^n tanh = P_n(t)         P_0 = t,  P_{n+1} = (1 - t^2) P_n'
//   (d/dtheta)^n sech = sech * Q_n(t)  Q_0 = 1,  Q_{n+1} = (1 - t^2) Q_n' - t Q_n
inline Poly tanh_derivative_poly(int n) {
    if (n < 0) throw std::invalid_argument("tanh_derivative_poly: negative index");
    Poly const one_minus_sq{1, 0, -1};
    Poly p = Poly::identity();
    for (int i = 0; i < n; ++i) p = one_minus_sq * p.derivative();
    return p;
}

inline Poly sech_derivative_poly(int n) {
    if (n < 0) throw std::invalid_argument("sech_derivative_poly: negative index");
    Poly const one_minus_sq{1, 0, -1};
    Poly const x = Poly::identity();
    Poly q = Poly::constant(Rational(1));
    for (int i = 0; i < n; ++i) q = one_minus_sq * q.derivative() - x * q;
    return q;
}

namespace detail {

inline Rational pow2(int e) { return Rational(Integer(1) << e); }

// Direct first-order recurrences for the transformed families, used as an
// independent route in tests: a_{n+1} = (x^2-1) a_n' from a_0 = x, and
// b_{n+1} = 2 (x^2-1) b_n' + 2x b_n from b_0 = 1.
inline Poly transformed_a_by_recurrence(int n) {
    Poly const sq_minus_one{-1, 0, 1};
    Poly a = Poly::identity();
    for (int i = 0; i < n; ++i) a = sq_minus_one * a.derivative();
    return a;
}

inline Poly transformed_b_by_recurrence(int n) {
    Poly const sq_minus_one{-1, 0, 1};
    Poly const two_x{0, 2};
    Poly b = Poly::constant(Rational(1));
    for (int i = 0; i < n; ++i) b = Rational(2) * sq_minus_one * b.derivative() + two_x * b;
    return b;
}

// d_n from the transformed Stembridge identity 2^n d_n = b_n - n 2^(n-1) a_{n-1}.
inline Poly transformed_d_by_identity(int n, Poly const& a_prev, Poly const& b_cur) {
    return (b_cur - Rational(Integer(n) << (n - 1)) * a_prev) / pow2(n);
}

// d_n written on the derivative polynomials, 2 d_n = (-1)^n (n P_{n-1} + 2 Q_n).
inline Poly transformed_d_by_derivative_polys(int n) {
    Poly s = Rational(n) * tanh_derivative_poly(n - 1) + Rational(2) * sech_derivative_poly(n);
    if (n % 2 != 0) s = -s;
    return s / Rational(2);
}

}  // namespace detail

// Images of the Eulerian polynomials under x -> (x-1)/(x+1) with the
// homogenizing prefactors that make them polynomials again:
//   type A: a_n = (-1)^n P_n, degree n+1, defined for n >= 0
//   type B: b_n = (-1)^n 2^n Q_n, degree n, defined for n >= 0
//   type D: d_n, degree n, defined for n >= 2 only
// The type D value is computed along two algebraically distinct routes and
// cross-checked before being returned.
inline Poly transformed_eulerian(CoxeterType t, int n) {
    if (n < 0) throw std::invalid_argument("transformed_eulerian: negative index");
    switch (t) {
        case CoxeterType::A: {
            Poly p = tanh_derivative_poly(n);
            return (n % 2 == 0) ? p : -p;
        }
        case CoxeterType::B: {
            Poly q = detail::pow2(n) * sech_derivative_poly(n);
            return (n % 2 == 0) ? q : -q;
        }
        case CoxeterType::D: {
            if (n < 2) throw std::domain_error("transformed_eulerian: type D defined for n >= 2");
            Poly d = detail::transformed_d_by_identity(n, transformed_eulerian(CoxeterType::A, n - 1),
                                                       transformed_eulerian(CoxeterType::B, n));
            if (d != detail::transformed_d_by_derivative_polys(n))
                throw std::logic_error("transformed_eulerian: the two routes to d_" + std::to_string(n) +
                                       " disagree");
            return d;
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace eulercert
