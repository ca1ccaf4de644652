#pragma once

#include <stdexcept>
#include <string>

namespace eulercert {

enum class CoxeterType { A, B, D };

inline std::string to_string(CoxeterType t) {
    switch (t) {
        case CoxeterType::A: return "A";
        case CoxeterType::B: return "B";
        case CoxeterType::D: return "D";
    }
    throw std::logic_error("unreachable");
}

inline CoxeterType coxeter_from_string(std::string const& s) {
    if (s == "A" || s == "a") return CoxeterType::A;
    if (s == "B" || s == "b") return CoxeterType::B;
    if (s == "D" || s == "d") return CoxeterType::D;
    throw std::invalid_argument("unknown Coxeter type: " + s);
}

}  // namespace eulercert
