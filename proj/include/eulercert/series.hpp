#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "eulercert/rational.hpp"

namespace eulercert {

// Truncated Maclaurin series with exact rational coefficients in ordinary
// normalization: coefficient of x^n at index n, indices 0..order().
// Binary operations truncate to the smaller order.
class TruncatedSeries {
  public:
    TruncatedSeries() : c_(1, Rational(0)) {}
    explicit TruncatedSeries(int order) : c_(check_order(order) + 1, Rational(0)) {}
    explicit TruncatedSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) c_.emplace_back(0);
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }

    Rational const& coeff(int n) const {
        if (n < 0 || n > order()) throw std::out_of_range("series: coefficient index beyond order");
        return c_[static_cast<std::size_t>(n)];
    }
    Rational& coeff(int n) { return c_[static_cast<std::size_t>(n)]; }

    friend TruncatedSeries operator+(TruncatedSeries const& a, TruncatedSeries const& b) {
        int const n = std::min(a.order(), b.order());
        TruncatedSeries r(n);
        for (int i = 0; i <= n; ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }

    friend TruncatedSeries operator-(TruncatedSeries const& a, TruncatedSeries const& b) {
        int const n = std::min(a.order(), b.order());
        TruncatedSeries r(n);
        for (int i = 0; i <= n; ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }

    friend TruncatedSeries operator*(TruncatedSeries const& a, TruncatedSeries const& b) {
        int const n = std::min(a.order(), b.order());
        TruncatedSeries r(n);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; i + j <= n; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        return r;
    }

    // Cauchy division; the divisor must be a unit (nonzero constant term).
    friend TruncatedSeries operator/(TruncatedSeries const& a, TruncatedSeries const& b) {
        if (b.c_[0] == 0) throw std::domain_error("series: division by series with zero constant term");
        int const n = std::min(a.order(), b.order());
        TruncatedSeries q(n);
        for (int i = 0; i <= n; ++i) {
            Rational acc = a.c_[i];
            for (int j = 1; j <= i && j <= b.order(); ++j) acc -= b.c_[j] * q.c_[i - j];
            q.c_[i] = acc / b.c_[0];
        }
        return q;
    }

    TruncatedSeries pow(int k) const {
        if (k < 0) throw std::invalid_argument("series: negative power");
        TruncatedSeries r = one(order());
        for (int i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    // f(lambda * x): multiplies coefficient n by lambda^n.
    TruncatedSeries scale_argument(Rational const& lambda) const {
        TruncatedSeries r = *this;
        Rational pw(1);
        for (int i = 1; i <= order(); ++i) {
            pw *= lambda;
            r.c_[i] *= pw;
        }
        return r;
    }

    static TruncatedSeries one(int order) {
        TruncatedSeries r(order);
        r.c_[0] = 1;
        return r;
    }

  private:
    static int check_order(int order) {
        if (order < 0) throw std::invalid_argument("series: negative order");
        return order;
    }

    std::vector<Rational> c_;
};

inline TruncatedSeries sin_series(int order) {
    TruncatedSeries s(order);
    Rational term(1);  // 1/(2k+1)! with alternating sign
    for (int n = 1; n <= order; n += 2) {
        if (n > 1) term /= Rational(static_cast<long>(n - 1) * n);
        s.coeff(n) = (((n - 1) / 2) % 2 == 0) ? term : -term;
    }
    return s;
}

inline TruncatedSeries cos_series(int order) {
    TruncatedSeries s(order);
    Rational term(1);
    s.coeff(0) = 1;
    for (int n = 2; n <= order; n += 2) {
        term /= Rational(static_cast<long>(n - 1) * n);
        s.coeff(n) = ((n / 2) % 2 == 0) ? term : -term;
    }
    return s;
}

inline TruncatedSeries tan_series(int order) { return sin_series(order) / cos_series(order); }
inline TruncatedSeries sec_series(int order) { return TruncatedSeries::one(order) / cos_series(order); }

// Hyperbolic counterparts by sign-twisting the circular coefficients:
// [x^n] tanh = (-1)^((n-1)/2) [x^n] tan, [x^n] sech = (-1)^(n/2) [x^n] sec.
// Keeps everything in rational arithmetic, no complex detour.
inline TruncatedSeries tanh_series(int order) {
    TruncatedSeries s = tan_series(order);
    for (int n = 3; n <= order; n += 2)
        if (((n - 1) / 2) % 2 == 1) s.coeff(n) = -s.coeff(n);
    return s;
}

inline TruncatedSeries sech_series(int order) {
    TruncatedSeries s = sec_series(order);
    for (int n = 2; n <= order; n += 2)
        if ((n / 2) % 2 == 1) s.coeff(n) = -s.coeff(n);
    return s;
}

inline TruncatedSeries tan_power_series(int k, int order) { return tan_series(order).pow(k); }

inline TruncatedSeries sec_tan_power_series(int k, int order) {
    return sec_series(order) * tan_series(order).pow(k);
}

inline Integer factorial(int n) {
    Integer f(1);
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

namespace detail {
inline Integer exponential_coefficient(TruncatedSeries const& s, int n) {
    Rational v = s.coeff(n) * Rational(factorial(n));
    if (v.get_den() != 1)
        throw std::logic_error("order-k number is not an integer; series engine is broken");
    return v.get_num();
}
}  // namespace detail

// Tangent numbers of order k: T(n,k) = n! [x^n] tan^k x.
inline Integer tangent_number(int n, int k) {
    if (k < 0 || n < k) throw std::invalid_argument("tangent_number: need 0 <= k <= n");
    return detail::exponential_coefficient(tan_power_series(k, n), n);
}

// Secant numbers of order k: S(n,k) = n! [x^n] sec x tan^k x; S(n,0) are the
// Euler numbers.
inline Integer secant_number(int n, int k) {
    if (k < 0 || n < k) throw std::invalid_argument("secant_number: need 0 <= k <= n");
    return detail::exponential_coefficient(sec_tan_power_series(k, n), n);
}

}  // namespace eulercert
