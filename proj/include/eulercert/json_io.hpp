#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "eulercert/poly.hpp"
#include "eulercert/rational.hpp"

namespace eulercert {

// Polynomials travel as JSON arrays of "num/den" coefficient strings in
// ascending degree order; nothing is ever rounded.
inline nlohmann::json poly_to_json(Poly const& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (auto const& c : p.coeffs()) arr.push_back(rational_str(c));
    return arr;
}

inline Poly poly_from_json(nlohmann::json const& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array of strings");
    std::vector<Rational> coeffs;
    coeffs.reserve(j.size());
    for (auto const& c : j) coeffs.push_back(rational_from_str(c.get<std::string>()));
    return Poly(std::move(coeffs));
}

}  // namespace eulercert
