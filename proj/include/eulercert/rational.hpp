#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace eulercert {

// Arbitrary-precision integers and rationals. mpq_class keeps values
// canonical (positive denominator, coprime num/den) after arithmetic;
// anything built by hand goes through make_rational below.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(Integer num, Integer den) {
    if (den == 0)
        throw std::invalid_argument("rational: zero denominator");
    Rational q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

// -1 / 0 / +1
inline int sign_of(Rational const& q) { return sgn(q); }
inline int sign_of(Integer const& z) { return sgn(z); }

inline Rational rational_abs(Rational const& q) { return abs(q); }

// Serialized form is always "num/den" with den > 0, e.g. "-3/1", "1/2".
inline std::string rational_str(Rational const& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Accepts "num/den" and bare "num".
inline Rational rational_from_str(std::string const& s) {
    auto slash = s.find('/');
    Integer num, den;
    try {
        if (slash == std::string::npos) {
            num = Integer(s);
            den = 1;
        } else {
            num = Integer(s.substr(0, slash));
            den = Integer(s.substr(slash + 1));
        }
    } catch (std::invalid_argument const&) {
        throw std::invalid_argument("rational: cannot parse \"" + s + "\"");
    }
    return make_rational(std::move(num), std::move(den));
}

}  // namespace eulercert
