#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "eulercert/json_io.hpp"
#include "eulercert/poly.hpp"
#include "eulercert/prng.hpp"
#include "eulercert/roots.hpp"

namespace eulercert {

enum class Claim { RealRootedInRegion, Interleaves, StrictlyInterleaves, CommonInterleaver, Compatible };

inline std::string claim_str(Claim c) {
    switch (c) {
        case Claim::RealRootedInRegion: return "real_rooted_in_region";
        case Claim::Interleaves: return "interleaves";
        case Claim::StrictlyInterleaves: return "strictly_interleaves";
        case Claim::CommonInterleaver: return "common_interleaver";
        case Claim::Compatible: return "compatible";
    }
    throw std::logic_error("unreachable");
}

inline Claim claim_from_str(std::string const& s) {
    if (s == "real_rooted_in_region") return Claim::RealRootedInRegion;
    if (s == "interleaves") return Claim::Interleaves;
    if (s == "strictly_interleaves") return Claim::StrictlyInterleaves;
    if (s == "common_interleaver") return Claim::CommonInterleaver;
    if (s == "compatible") return Claim::Compatible;
    throw std::invalid_argument("unknown claim: " + s);
}

struct Region {
    enum class Kind { AllReals, OpenInterval, ClosedInterval, NegativeAxis };
    Kind kind = Kind::AllReals;
    Rational lo, hi;

    static Region all_reals() { return {Kind::AllReals, Rational(0), Rational(0)}; }
    static Region open_interval(Rational lo, Rational hi) { return {Kind::OpenInterval, std::move(lo), std::move(hi)}; }
    static Region closed_interval(Rational lo, Rational hi) {
        return {Kind::ClosedInterval, std::move(lo), std::move(hi)};
    }
    static Region negative_axis() { return {Kind::NegativeAxis, Rational(0), Rational(0)}; }

    std::string str() const {
        switch (kind) {
            case Kind::AllReals: return "(-inf, inf)";
            case Kind::OpenInterval: return "(" + rational_str(lo) + ", " + rational_str(hi) + ")";
            case Kind::ClosedInterval: return "[" + rational_str(lo) + ", " + rational_str(hi) + "]";
            case Kind::NegativeAxis: return "(-inf, 0)";
        }
        throw std::logic_error("unreachable");
    }
};

// Evidence rows; these are exactly what the JSON schema carries.
struct RootInterval {
    Rational lo, hi;
    int multiplicity = 1;
};

struct Checkpoint {
    Rational x;
    long nf = 0, ng = 0;
};

// Machine-checkable record of one claim. `details` holds pairwise
// sub-certificates of a compatibility claim; they are emitted as separate
// documents, the serialized form of a certificate is always flat.
struct Certificate {
    Claim claim = Claim::RealRootedInRegion;
    std::vector<Poly> polys;
    std::vector<RootInterval> roots;
    std::vector<Checkpoint> checkpoints;
    bool pass = false;
    std::optional<std::int64_t> seed;
    std::vector<Certificate> details;

    nlohmann::json to_json() const {
        nlohmann::json jp = nlohmann::json::array();
        for (auto const& p : polys) jp.push_back(poly_to_json(p));
        nlohmann::json jr = nlohmann::json::array();
        for (auto const& r : roots)
            jr.push_back({{"lo", rational_str(r.lo)}, {"hi", rational_str(r.hi)}, {"mult", r.multiplicity}});
        nlohmann::json jc = nlohmann::json::array();
        for (auto const& c : checkpoints)
            jc.push_back({{"x", rational_str(c.x)}, {"nf", c.nf}, {"ng", c.ng}});
        nlohmann::json j;
        j["claim"] = claim_str(claim);
        j["polys"] = std::move(jp);
        j["evidence"] = {{"roots", std::move(jr)}, {"checkpoints", std::move(jc)}};
        j["verdict"] = pass ? "pass" : "fail";
        if (seed)
            j["seed"] = *seed;
        else
            j["seed"] = nullptr;
        return j;
    }

    static Certificate from_json(nlohmann::json const& j) {
        Certificate c;
        c.claim = claim_from_str(j.at("claim").get<std::string>());
        for (auto const& p : j.at("polys")) c.polys.push_back(poly_from_json(p));
        for (auto const& r : j.at("evidence").at("roots"))
            c.roots.push_back({rational_from_str(r.at("lo").get<std::string>()),
                               rational_from_str(r.at("hi").get<std::string>()), r.at("mult").get<int>()});
        for (auto const& cp : j.at("evidence").at("checkpoints"))
            c.checkpoints.push_back({rational_from_str(cp.at("x").get<std::string>()), cp.at("nf").get<long>(),
                                     cp.at("ng").get<long>()});
        c.pass = j.at("verdict").get<std::string>() == "pass";
        if (!j.at("seed").is_null()) c.seed = j.at("seed").get<std::int64_t>();
        return c;
    }
};

namespace detail {

inline std::vector<RootInterval> to_intervals(RootList const& rl) {
    std::vector<RootInterval> out;
    out.reserve(rl.roots.size());
    for (auto const& r : rl.roots) out.push_back({r.lo, r.hi, r.multiplicity});
    return out;
}

inline RootList isolate_real_rooted(Poly const& p, std::string const& label) {
    if (p.is_zero()) throw std::domain_error("not real-rooted: " + label + " is the zero polynomial");
    RootList rl = isolate_roots(p);
    if (rl.total_multiplicity() != p.degree())
        throw std::domain_error("not real-rooted: " + label + " = " + p.str());
    return rl;
}

}  // namespace detail

inline bool root_in_region(RealRoot& r, Region const& region) {
    switch (region.kind) {
        case Region::Kind::AllReals: return true;
        case Region::Kind::NegativeAxis: return compare_with_point(r, Rational(0)) == RootOrder::Less;
        case Region::Kind::OpenInterval:
            return compare_with_point(r, region.lo) == RootOrder::Greater &&
                   compare_with_point(r, region.hi) == RootOrder::Less;
        case Region::Kind::ClosedInterval:
            return compare_with_point(r, region.lo) != RootOrder::Less &&
                   compare_with_point(r, region.hi) != RootOrder::Greater;
    }
    throw std::logic_error("unreachable");
}

// Passes iff the multiplicity-weighted real-root count equals the degree and
// every root lies in the region. Open and half-open regions check their
// endpoints explicitly: a root sitting exactly on an open endpoint is
// outside, and the evaluation makes that visible without any refinement.
inline Certificate certify_real_rooted(Poly const& p, Region const& region) {
    if (p.degree() < 1) throw std::invalid_argument("certify_real_rooted: need a nonconstant polynomial");
    Certificate cert;
    cert.claim = Claim::RealRootedInRegion;
    cert.polys = {p};
    RootList rl = isolate_roots(p);
    bool pass = rl.total_multiplicity() == p.degree();
    if (region.kind == Region::Kind::OpenInterval && (p(region.lo) == 0 || p(region.hi) == 0)) pass = false;
    if (region.kind == Region::Kind::NegativeAxis && p(Rational(0)) == 0) pass = false;
    for (auto& r : rl.roots)
        if (!root_in_region(r, region)) pass = false;
    cert.roots = detail::to_intervals(rl);
    cert.pass = pass;
    return cert;
}

namespace detail {

struct MergedRoot {
    RealRoot repr;
    int mult_f = 0;
    int mult_g = 0;
};

// Union of two descending root lists as distinct values; shared roots are
// detected exactly and merged.
inline std::vector<MergedRoot> merge_roots(RootList& f, RootList& g) {
    std::vector<MergedRoot> out;
    std::size_t i = 0, j = 0;
    while (i < f.roots.size() || j < g.roots.size()) {
        if (i == f.roots.size()) {
            out.push_back({g.roots[j], 0, g.roots[j].multiplicity});
            ++j;
        } else if (j == g.roots.size()) {
            out.push_back({f.roots[i], f.roots[i].multiplicity, 0});
            ++i;
        } else {
            switch (compare_roots(f.roots[i], g.roots[j])) {
                case RootOrder::Greater:
                    out.push_back({f.roots[i], f.roots[i].multiplicity, 0});
                    ++i;
                    break;
                case RootOrder::Less:
                    out.push_back({g.roots[j], 0, g.roots[j].multiplicity});
                    ++j;
                    break;
                case RootOrder::Equal:
                    out.push_back({f.roots[i], f.roots[i].multiplicity, g.roots[j].multiplicity});
                    ++i;
                    ++j;
                    break;
            }
        }
    }
    return out;
}

}  // namespace detail

// Interleaving of zero sequences: with s the roots of F and r the roots of f,
// both nonincreasing and repeated by multiplicity, the chain
// s_1 >= r_1 >= s_2 >= r_2 >= ... must hold (alternating, truncated at the
// shorter sequence). Strict mode additionally forbids every tie.
inline Certificate check_interleaving(Poly const& f, Poly const& F, bool strict) {
    if (f.is_zero() || F.is_zero()) throw std::invalid_argument("check_interleaving: zero polynomial");
    int const df = f.degree(), dF = F.degree();
    if (dF != df && dF != df + 1)
        throw std::invalid_argument("check_interleaving: degree gap, deg F must be deg f or deg f + 1");
    RootList rf = detail::isolate_real_rooted(f, "f");
    RootList rF = detail::isolate_real_rooted(F, "F");

    std::vector<RealRoot*> r, s;
    for (auto& rt : rf.roots)
        for (int k = 0; k < rt.multiplicity; ++k) r.push_back(&rt);
    for (auto& rt : rF.roots)
        for (int k = 0; k < rt.multiplicity; ++k) s.push_back(&rt);

    bool weak_ok = true, strict_ok = true;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < s.size()) {
            RootOrder const o = compare_roots(*s[i], *r[i]);
            if (o == RootOrder::Less) weak_ok = false;
            if (o != RootOrder::Greater) strict_ok = false;
        }
        if (i + 1 < s.size()) {
            RootOrder const o = compare_roots(*r[i], *s[i + 1]);
            if (o == RootOrder::Less) weak_ok = false;
            if (o != RootOrder::Greater) strict_ok = false;
        }
    }

    Certificate cert;
    cert.claim = strict ? Claim::StrictlyInterleaves : Claim::Interleaves;
    cert.polys = {f, F};
    for (auto const& m : detail::merge_roots(rf, rF))
        cert.roots.push_back({m.repr.lo, m.repr.hi, m.mult_f + m.mult_g});
    cert.pass = strict ? (weak_ok && strict_ok) : weak_ok;
    return cert;
}

// Common-interleaver criterion: f and g admit one iff the step functions
// n_f, n_g (roots in [x, inf), with multiplicity) never differ by more than
// one. Both are constant between consecutive distinct roots of f*g, so the
// finite checkpoint table below decides the condition for every real x, and
// each recorded x is rational so the table can be re-checked by evaluation
// alone.
inline Certificate common_interleaver_exists(Poly const& f, Poly const& g) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("common_interleaver: zero polynomial");
    if (sign_of(f.leading()) <= 0 || sign_of(g.leading()) <= 0)
        throw std::invalid_argument("common_interleaver: leading coefficients must be positive");
    RootList rf = detail::isolate_real_rooted(f, "f");
    RootList rg = detail::isolate_real_rooted(g, "g");
    auto merged = detail::merge_roots(rf, rg);

    // strict gaps between neighbors so every gap holds a rational witness
    for (std::size_t i = 1; i < merged.size(); ++i)
        while (!(merged[i].repr.hi < merged[i - 1].repr.lo)) {
            refine_step(merged[i - 1].repr);
            refine_step(merged[i].repr);
        }

    Certificate cert;
    cert.claim = Claim::CommonInterleaver;
    cert.polys = {f, g};
    bool pass = true;
    long nf = 0, ng = 0;
    if (!merged.empty()) cert.checkpoints.push_back({merged.front().repr.hi + 1, 0, 0});
    for (std::size_t i = 0; i < merged.size(); ++i) {
        nf += merged[i].mult_f;
        ng += merged[i].mult_g;
        if (nf - ng > 1 || ng - nf > 1) pass = false;
        Rational const x = (i + 1 < merged.size()) ? (merged[i].repr.lo + merged[i + 1].repr.hi) / 2
                                                   : merged[i].repr.lo - 1;
        cert.checkpoints.push_back({x, nf, ng});
        cert.roots.push_back({merged[i].repr.lo, merged[i].repr.hi, merged[i].mult_f + merged[i].mult_g});
    }
    cert.pass = pass;
    return cert;
}

struct CompatibilityOptions {
    std::int64_t seed = 20240917;
    int samples = 64;
    long weight_scale = 16;  // weights drawn uniformly from {0, 1, ..., scale}/scale
};

// Pairwise common-interleaver test (which is equivalent to compatibility of
// the whole family), plus a seeded spot-check that random nonnegative
// combinations really are real-rooted.
inline Certificate check_compatibility(std::vector<Poly> const& polys, CompatibilityOptions const& opts = {}) {
    if (polys.empty()) throw std::invalid_argument("check_compatibility: empty family");
    for (auto const& p : polys) {
        if (p.is_zero() || sign_of(p.leading()) <= 0)
            throw std::invalid_argument("check_compatibility: leading coefficients must be positive");
        detail::isolate_real_rooted(p, "family member");
    }

    Certificate cert;
    cert.claim = Claim::Compatible;
    cert.polys = polys;
    cert.seed = opts.seed;
    bool pass = true;

    for (std::size_t i = 0; i < polys.size(); ++i)
        for (std::size_t j = i + 1; j < polys.size(); ++j) {
            Certificate pairwise = common_interleaver_exists(polys[i], polys[j]);
            if (!pairwise.pass) pass = false;
            for (auto const& cp : pairwise.checkpoints) cert.checkpoints.push_back(cp);
            cert.details.push_back(std::move(pairwise));
        }

    SplitMix64 rng(static_cast<std::uint64_t>(opts.seed));
    for (int s = 0; s < opts.samples; ++s) {
        Poly combo;
        for (auto const& p : polys) {
            long const w = static_cast<long>(rng.next_below(static_cast<std::uint64_t>(opts.weight_scale)));
            combo += p * make_rational(w, opts.weight_scale);
        }
        if (combo.degree() >= 1 && isolate_roots(combo).total_multiplicity() != combo.degree()) pass = false;
    }
    cert.pass = pass;
    return cert;
}

}  // namespace eulercert
