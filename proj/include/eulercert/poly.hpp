#pragma once

#include <algorithm>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "eulercert/rational.hpp"

namespace eulercert {

// Dense univariate polynomial over Rational, coefficient of x^i at index i.
// The zero polynomial is the empty coefficient vector and reports degree -1
// (standing in for "minus infinity"); every constructor trims trailing zeros
// so the leading coefficient of a nonzero polynomial is never zero.
class Poly {
  public:
    Poly() = default;

    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    Poly(std::initializer_list<long> coeffs) {
        c_.reserve(coeffs.size());
        for (long v : coeffs) c_.emplace_back(v);
        trim();
    }

    static Poly zero() { return Poly(); }

    static Poly constant(Rational v) {
        Poly p;
        if (v != 0) p.c_.push_back(std::move(v));
        return p;
    }

    static Poly identity() { return Poly{0, 1}; }

    static Poly monomial(int deg, Rational coeff) {
        Poly p;
        if (coeff != 0) {
            p.c_.assign(static_cast<std::size_t>(deg) + 1, Rational(0));
            p.c_.back() = std::move(coeff);
        }
        return p;
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    Rational coeff(int i) const {
        if (i < 0 || i > degree()) return Rational(0);
        return c_[static_cast<std::size_t>(i)];
    }

    Rational const& leading() const {
        if (c_.empty()) throw std::domain_error("poly: zero polynomial has no leading coefficient");
        return c_.back();
    }

    std::vector<Rational> const& coeffs() const { return c_; }

    friend bool operator==(Poly const& a, Poly const& b) { return a.c_ == b.c_; }
    friend bool operator!=(Poly const& a, Poly const& b) { return !(a == b); }

    friend Poly operator+(Poly const& a, Poly const& b) {
        Poly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
        r.trim();
        return r;
    }

    friend Poly operator-(Poly const& a, Poly const& b) { return a + (-b); }

    Poly operator-() const {
        Poly r(*this);
        for (auto& v : r.c_) v = -v;
        return r;
    }

    // Schoolbook convolution; degrees add for nonzero factors.
    friend Poly operator*(Poly const& a, Poly const& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        Poly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        r.trim();
        return r;
    }

    friend Poly operator*(Poly const& a, Rational const& s) {
        if (s == 0) return Poly();
        Poly r(a);
        for (auto& v : r.c_) v *= s;
        return r;
    }
    friend Poly operator*(Rational const& s, Poly const& a) { return a * s; }

    friend Poly operator/(Poly const& a, Rational const& s) {
        if (s == 0) throw std::domain_error("poly: division by zero scalar");
        Poly r(a);
        for (auto& v : r.c_) v /= s;
        return r;
    }

    Poly& operator+=(Poly const& o) { return *this = *this + o; }
    Poly& operator-=(Poly const& o) { return *this = *this - o; }
    Poly& operator*=(Poly const& o) { return *this = *this * o; }
    Poly& operator*=(Rational const& s) { return *this = *this * s; }

    Poly derivative() const {
        Poly r;
        if (degree() <= 0) return r;
        r.c_.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r.c_.push_back(c_[i] * Rational(static_cast<long>(i)));
        r.trim();
        return r;
    }

    // Horner evaluation, exact.
    Rational operator()(Rational const& x) const {
        Rational acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) {
            acc *= x;
            acc += c_[i];
        }
        return acc;
    }

    Poly pow(unsigned long e) const {
        Poly r = Poly::constant(Rational(1));
        Poly base = *this;
        for (; e != 0; e >>= 1) {
            if (e & 1) r *= base;
            if (e >> 1) base *= base;
        }
        return r;
    }

    // f(-x)
    Poly mirror() const {
        Poly r(*this);
        for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
        return r;
    }

    std::string str(std::string const& var = "x") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = c_.size(); i-- > 0;) {
            Rational const& v = c_[i];
            if (v == 0) continue;
            if (!first) os << (sign_of(v) < 0 ? " - " : " + ");
            else if (sign_of(v) < 0) os << "-";
            first = false;
            Rational a = rational_abs(v);
            if (a != 1 || i == 0) {
                os << a.get_num().get_str();
                if (a.get_den() != 1) os << "/" << a.get_den().get_str();
                if (i > 0) os << "*";
            }
            if (i > 0) {
                os << var;
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

}  // namespace eulercert
