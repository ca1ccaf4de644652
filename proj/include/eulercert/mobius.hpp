#pragma once

#include <stdexcept>

#include "eulercert/poly.hpp"
#include "eulercert/rational.hpp"

namespace eulercert {

// Fractional linear substitution x -> (a*x + b) / (c*x + d).
struct MobiusMap {
    Rational a, b, c, d;

    Rational det() const { return a * d - b * c; }
    bool degenerate() const { return det() == 0; }

    // (a x + b)/(c x + d) composed with this gives the identity up to det().
    MobiusMap inverse() const { return MobiusMap{d, -b, -c, a}; }

    static MobiusMap identity() { return {Rational(1), Rational(0), Rational(0), Rational(1)}; }
    // x -> (x - 1)/(x + 1), the change of variables between the Eulerian
    // polynomials and their symmetric transforms.
    static MobiusMap cayley() { return {Rational(1), Rational(-1), Rational(1), Rational(1)}; }
    static MobiusMap cayley_inverse() { return cayley().inverse(); }
};

// Homogenized composition (c*x + d)^hom_degree * p((a*x + b)/(c*x + d)),
// by synthetic Horner on the pair of linear forms. O(n^2) coefficient
// multiplications, fine at the degrees this library runs at.
inline Poly mobius_compose(Poly const& p, MobiusMap const& m, int hom_degree) {
    if (m.degenerate()) throw std::invalid_argument("mobius_compose: degenerate map");
    if (hom_degree < p.degree()) throw std::invalid_argument("mobius_compose: hom_degree below degree");
    Poly const num{std::vector<Rational>{m.b, m.a}};
    Poly const den{std::vector<Rational>{m.d, m.c}};
    if (p.is_zero()) return Poly();
    int const dp = p.degree();
    Poly acc = Poly::constant(p.coeff(dp));
    Poly den_pow = Poly::constant(Rational(1));
    for (int i = dp - 1; i >= 0; --i) {
        den_pow *= den;
        acc = acc * num + Poly::constant(p.coeff(i)) * den_pow;
    }
    return acc * den.pow(static_cast<unsigned long>(hom_degree - dp));
}

}  // namespace eulercert
