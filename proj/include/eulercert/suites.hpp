#pragma once

#include <string>
#include <utility>
#include <vector>

#include "eulercert/certify.hpp"
#include "eulercert/checks.hpp"
#include "eulercert/derivpoly.hpp"
#include "eulercert/eulerian.hpp"
#include "eulercert/report.hpp"
#include "eulercert/roots.hpp"

namespace eulercert {

namespace detail {

inline std::vector<RealRoot> positive_roots(Poly const& p) {
    std::vector<RealRoot> out;
    RootList rl = isolate_roots(p);
    for (auto& r : rl.roots)
        if (compare_with_point(r, Rational(0)) == RootOrder::Greater) out.push_back(r);
    return out;  // descending
}

// strictly decreasing along the whole sequence
inline bool strictly_decreasing(std::vector<RealRoot*> const& seq) {
    for (std::size_t i = 1; i < seq.size(); ++i)
        if (compare_roots(*seq[i - 1], *seq[i]) != RootOrder::Greater) return false;
    return true;
}

// x_1 > y_1 > x_2 > y_2 > ... > x_m > y_m
inline bool alternates(std::vector<RealRoot>& x, std::vector<RealRoot>& y) {
    if (x.size() != y.size()) return false;
    std::vector<RealRoot*> seq;
    for (std::size_t i = 0; i < x.size(); ++i) {
        seq.push_back(&x[i]);
        seq.push_back(&y[i]);
    }
    return strictly_decreasing(seq);
}

// x_1 > y_1 > z_2 > x_2 > y_2 > z_3 > ... > x_m > y_m, i.e. triples
// (x_i, y_i, z_{i+1}) for i < m and the tail pair (x_m, y_m).
inline bool alternates_with_inner(std::vector<RealRoot>& x, std::vector<RealRoot>& y, std::vector<RealRoot>& z) {
    if (x.size() != y.size() || z.size() != x.size()) return false;
    std::vector<RealRoot*> seq;
    for (std::size_t i = 0; i < x.size(); ++i) {
        seq.push_back(&x[i]);
        seq.push_back(&y[i]);
        if (i + 1 < z.size()) seq.push_back(&z[i + 1]);
    }
    return strictly_decreasing(seq);
}

inline bool largest_root_is_one(Poly const& p, std::vector<RealRoot>& pos) {
    if (p(Rational(1)) != 0 || pos.empty()) return false;
    return compare_with_point(pos.front(), Rational(1)) == RootOrder::Equal;
}

}  // namespace detail

// Positive-root chains of the transformed families at pair index m: the
// a- and b-families interlace strictly with top root exactly 1, and the
// d-family roots fall strictly between them. d_2 = x^2 has its only zero at
// the origin, so the even d-chain only exists from m = 2 on.
inline Report zero_chains_at(int m) {
    if (m < 1) throw std::invalid_argument("zero_chains_at: index must be at least 1");
    Report rep;
    std::size_t const expect = static_cast<std::size_t>(m);

    Poly const a_odd = transformed_eulerian(CoxeterType::A, 2 * m - 1);
    Poly const b_even = transformed_eulerian(CoxeterType::B, 2 * m);
    auto s = detail::positive_roots(a_odd);
    auto r = detail::positive_roots(b_even);
    bool ok = s.size() == expect && r.size() == expect && detail::largest_root_is_one(a_odd, s) &&
              detail::alternates(s, r);
    rep.add_result("chain_a_odd_over_b_even", 2 * m, "strict chain, top root 1",
                   ok ? "strict chain, top root 1" : "violated", ok);

    Poly const a_even = transformed_eulerian(CoxeterType::A, 2 * m);
    Poly const b_odd = transformed_eulerian(CoxeterType::B, 2 * m + 1);
    auto sa = detail::positive_roots(a_even);
    auto rb = detail::positive_roots(b_odd);
    ok = sa.size() == expect && rb.size() == expect && detail::largest_root_is_one(a_even, sa) &&
         detail::alternates(sa, rb);
    rep.add_result("chain_a_even_over_b_odd", 2 * m + 1, "strict chain, top root 1",
                   ok ? "strict chain, top root 1" : "violated", ok);

    if (m >= 2) {
        auto c = detail::positive_roots(transformed_eulerian(CoxeterType::D, 2 * m));
        ok = c.size() == expect && detail::alternates_with_inner(r, c, s);
        rep.add_result("chain_d_even_between", 2 * m, "strict chain", ok ? "strict chain" : "violated", ok);
    }

    auto dd = detail::positive_roots(transformed_eulerian(CoxeterType::D, 2 * m + 1));
    ok = dd.size() == expect && detail::alternates_with_inner(rb, dd, sa);
    rep.add_result("chain_d_odd_between", 2 * m + 1, "strict chain", ok ? "strict chain" : "violated", ok);
    return rep;
}

inline Report verify_zero_chains(int n_max) {
    Report rep;
    for (int m = 1; m <= n_max; ++m) rep.merge(zero_chains_at(m));
    return rep;
}

struct NamedCertificate {
    long n = 0;
    std::string name;
    Certificate cert;
};

// Real-rootedness of the type D Eulerian polynomial on the negative axis.
inline std::vector<NamedCertificate> rz_at(int n) {
    return {{n, "D_real_rooted_negative_axis",
             certify_real_rooted(eulerian_fast(CoxeterType::D, n), Region::negative_axis())}};
}

// Interleaving facts about the derivative polynomials: the sech family is
// strictly interleaved by the tanh family, consecutive members interleave
// weakly, and the root locations distinguish the closed interval [-1, 1]
// (tanh family) from the open one (sech family).
inline std::vector<NamedCertificate> interleave_at(int n) {
    Poly const p = tanh_derivative_poly(n);
    Poly const p_prev = tanh_derivative_poly(n - 1);
    Poly const q = sech_derivative_poly(n);
    Poly const q_prev = sech_derivative_poly(n - 1);
    std::vector<NamedCertificate> out;
    out.push_back({n, "sech_strictly_interleaved_by_tanh", check_interleaving(q, p, true)});
    out.push_back({n, "tanh_consecutive_interleave", check_interleaving(p_prev, p, false)});
    out.push_back({n, "sech_consecutive_interleave", check_interleaving(q_prev, q, false)});
    out.push_back({n, "tanh_roots_in_closed_unit_interval",
                   certify_real_rooted(p, Region::closed_interval(Rational(-1), Rational(1)))});
    out.push_back({n, "sech_roots_in_open_unit_interval",
                   certify_real_rooted(q, Region::open_interval(Rational(-1), Rational(1)))});
    return out;
}

// Compatibility of {a_{n-1}, b_n, d_n} and of {A_{n-1}, B_n, D_n}; the
// pairwise certificates ride along as separate entries.
inline std::vector<NamedCertificate> compat_at(int n, CompatibilityOptions const& opts = {}) {
    std::vector<NamedCertificate> out;
    char const* pair_names[] = {"pair_0_1", "pair_0_2", "pair_1_2"};

    std::vector<Poly> transformed = {transformed_eulerian(CoxeterType::A, n - 1),
                                     transformed_eulerian(CoxeterType::B, n),
                                     transformed_eulerian(CoxeterType::D, n)};
    Certificate ct = check_compatibility(transformed, opts);
    for (std::size_t k = 0; k < ct.details.size(); ++k)
        out.push_back({n, std::string("transformed_common_interleaver_") + pair_names[k], ct.details[k]});
    ct.details.clear();
    out.push_back({n, "transformed_triple_compatible", std::move(ct)});

    std::vector<Poly> eulerian = {eulerian_fast(CoxeterType::A, n - 1), eulerian_fast(CoxeterType::B, n),
                                  eulerian_fast(CoxeterType::D, n)};
    Certificate ce = check_compatibility(eulerian, opts);
    for (std::size_t k = 0; k < ce.details.size(); ++k)
        out.push_back({n, std::string("eulerian_common_interleaver_") + pair_names[k], ce.details[k]});
    ce.details.clear();
    out.push_back({n, "eulerian_triple_compatible", std::move(ce)});
    return out;
}

inline std::vector<NamedCertificate> rz_suite(int n_max) {
    std::vector<NamedCertificate> out;
    for (int n = 2; n <= n_max; ++n)
        for (auto& c : rz_at(n)) out.push_back(std::move(c));
    return out;
}

inline std::vector<NamedCertificate> interleave_suite(int n_max) {
    std::vector<NamedCertificate> out;
    for (int n = 2; n <= n_max; ++n)
        for (auto& c : interleave_at(n)) out.push_back(std::move(c));
    return out;
}

inline std::vector<NamedCertificate> compat_suite(int n_max, CompatibilityOptions const& opts = {}) {
    std::vector<NamedCertificate> out;
    for (int n = 2; n <= n_max; ++n)
        for (auto& c : compat_at(n, opts)) out.push_back(std::move(c));
    return out;
}

}  // namespace eulercert
