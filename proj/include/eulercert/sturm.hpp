#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "eulercert/intpoly.hpp"
#include "eulercert/poly.hpp"

namespace eulercert {

// Sturm chain of a square-free primitive integer polynomial. The canonical
// remainder recursion S_{i+1} = -rem(S_{i-1}, S_i) is run with
// content-normalized pseudo-remainders, so every element stays a positive
// rational multiple of the rational-arithmetic chain element and sign
// variation counts are unchanged.
class SturmChain {
  public:
    explicit SturmChain(intpoly::ZPoly squarefree) {
        if (intpoly::is_zero(squarefree)) throw std::domain_error("sturm: zero polynomial");
        seq_.push_back(std::move(squarefree));
        if (intpoly::degree(seq_[0]) == 0) return;
        seq_.push_back(intpoly::primitive(intpoly::derivative(seq_[0])));
        while (intpoly::degree(seq_.back()) > 0) {
            intpoly::ZPoly r = intpoly::prem_signed(seq_[seq_.size() - 2], seq_.back());
            if (intpoly::is_zero(r)) break;  // input was not square-free after all
            seq_.push_back(intpoly::primitive(intpoly::negate(std::move(r))));
        }
    }

    intpoly::ZPoly const& polynomial() const { return seq_[0]; }

    int variations_at(Rational const& x) const {
        int var = 0, prev = 0;
        for (auto const& s : seq_) {
            int const sg = intpoly::sign_at(s, x);
            if (sg != 0 && prev != 0 && sg != prev) ++var;
            if (sg != 0) prev = sg;
        }
        return var;
    }

    int variations_neg_inf() const {
        int var = 0, prev = 0;
        for (auto const& s : seq_) {
            int const sg = intpoly::sign_at_neg_inf(s);
            if (sg != 0 && prev != 0 && sg != prev) ++var;
            if (sg != 0) prev = sg;
        }
        return var;
    }

    int variations_pos_inf() const {
        int var = 0, prev = 0;
        for (auto const& s : seq_) {
            int const sg = intpoly::sign_at_pos_inf(s);
            if (sg != 0 && prev != 0 && sg != prev) ++var;
            if (sg != 0) prev = sg;
        }
        return var;
    }

    // Distinct real roots in the open interval; endpoints must not be roots.
    int count_open(Rational const& lo, Rational const& hi) const {
        return variations_at(lo) - variations_at(hi);
    }

    int count_all() const { return variations_neg_inf() - variations_pos_inf(); }

    // roots in (-inf, x); x must not be a root
    int count_below(Rational const& x) const { return variations_neg_inf() - variations_at(x); }
    // roots in (x, +inf); x must not be a root
    int count_above(Rational const& x) const { return variations_at(x) - variations_pos_inf(); }

  private:
    std::vector<intpoly::ZPoly> seq_;
};

// Builds a chain on the square-free part of p.
inline SturmChain sturm_chain_of(Poly const& p) {
    auto [z, scale] = intpoly::from_poly(p);
    (void)scale;
    return SturmChain(intpoly::squarefree_part(z));
}

// Number of distinct real roots of p in (lo, hi). Endpoints that are roots
// are the caller's problem and rejected loudly.
inline int sturm_count(Poly const& p, Rational const& lo, Rational const& hi) {
    if (p.is_zero()) throw std::domain_error("sturm_count: zero polynomial");
    if (!(lo < hi)) throw std::invalid_argument("sturm_count: need lo < hi");
    if (p(lo) == 0 || p(hi) == 0) throw std::invalid_argument("sturm_count: endpoint is a root");
    return sturm_chain_of(p).count_open(lo, hi);
}

}  // namespace eulercert
