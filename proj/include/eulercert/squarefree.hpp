#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "eulercert/intpoly.hpp"
#include "eulercert/poly.hpp"

namespace eulercert {

// Yun square-free decomposition. Factors come back primitive over Z with
// positive leading coefficients, pairwise coprime and square-free; the
// product of factor^multiplicity equals the input up to a rational constant.
inline std::vector<std::pair<Poly, int>> squarefree_decomposition(Poly const& p) {
    if (p.is_zero()) throw std::domain_error("squarefree_decomposition: zero polynomial");
    std::vector<std::pair<Poly, int>> out;
    if (p.degree() == 0) return out;

    auto [f, scale] = intpoly::from_poly(p);
    (void)scale;
    if (sign_of(f.back()) < 0) f = intpoly::negate(std::move(f));

    intpoly::ZPoly fd = intpoly::derivative(f);
    intpoly::ZPoly g = intpoly::gcd(f, fd);
    if (intpoly::degree(g) == 0) {
        out.emplace_back(intpoly::to_poly(f), 1);
        return out;
    }
    intpoly::ZPoly b = intpoly::divexact(f, g);
    intpoly::ZPoly c = intpoly::divexact(fd, g);
    // d = c - b'
    intpoly::ZPoly d;
    {
        intpoly::ZPoly bd = intpoly::derivative(b);
        d.assign(std::max(c.size(), bd.size()), Integer(0));
        for (std::size_t i = 0; i < c.size(); ++i) d[i] = c[i];
        for (std::size_t i = 0; i < bd.size(); ++i) d[i] -= bd[i];
        intpoly::trim(d);
    }
    for (int mult = 1; intpoly::degree(b) > 0; ++mult) {
        intpoly::ZPoly a = intpoly::gcd(b, d);
        if (intpoly::degree(a) > 0) out.emplace_back(intpoly::to_poly(a), mult);
        b = intpoly::divexact(b, a);
        intpoly::ZPoly cnext = intpoly::divexact(d, a);
        intpoly::ZPoly bd = intpoly::derivative(b);
        d.assign(std::max(cnext.size(), bd.size()), Integer(0));
        for (std::size_t i = 0; i < cnext.size(); ++i) d[i] = cnext[i];
        for (std::size_t i = 0; i < bd.size(); ++i) d[i] -= bd[i];
        intpoly::trim(d);
    }
    return out;
}

// gcd lifted to the rational level: primitive integer gcd, positive lc.
inline Poly poly_gcd(Poly const& p, Poly const& q) {
    auto zp = intpoly::from_poly(p).first;
    auto zq = intpoly::from_poly(q).first;
    return intpoly::to_poly(intpoly::gcd(std::move(zp), std::move(zq)));
}

}  // namespace eulercert
