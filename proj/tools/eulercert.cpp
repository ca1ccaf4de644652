// Command-line front end: exact coefficient tables, identity verification
// suites, and root-certification suites with JSON/CSV artifacts.
//
// Exit codes: 0 all checks pass, 1 a verified claim is false, 2 usage error,
// 3 work exceeds the enumeration budget.

#include <atomic>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "eulercert/eulercert.hpp"

namespace {

using namespace eulercert;
using nlohmann::json;

struct RunConfig {
    std::string family;
    std::string suite;
    std::string check;
    int n = -1;
    int n_max = -1;
    int brute_cap = kDefaultBruteCap;
    int series_order = -1;
    std::string format = "csv";
    std::string out_path;
    std::int64_t seed = CompatibilityOptions{}.seed;
    int jobs = 1;
    bool brute = false;
};

void emit(RunConfig const& cfg, std::string const& text) {
    if (cfg.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(cfg.out_path, std::ios::binary);
    if (!os) throw std::invalid_argument("cannot open output file: " + cfg.out_path);
    os << text;
}

std::string csv_cell(Rational const& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return rational_str(q);
}

// ---- table ---------------------------------------------------------------

Poly table_row(RunConfig const& cfg, int n) {
    std::string const& f = cfg.family;
    if (f == "A" || f == "B" || f == "D") {
        CoxeterType const t = coxeter_from_string(f);
        return cfg.brute ? eulerian_brute(t, n, cfg.brute_cap) : eulerian_fast(t, n);
    }
    if (f == "P") return tanh_derivative_poly(n);
    if (f == "Q") return sech_derivative_poly(n);
    if (f == "a") return transformed_eulerian(CoxeterType::A, n);
    if (f == "b") return transformed_eulerian(CoxeterType::B, n);
    if (f == "d") return transformed_eulerian(CoxeterType::D, n);
    throw std::invalid_argument("unknown family: " + f +
                                " (expected one of A, B, D, P, Q, a, b, d)");
}

int cmd_table(RunConfig const& cfg) {
    int const n_min = (cfg.family == "d") ? 2 : 0;
    int lo = n_min, hi = cfg.n_max >= 0 ? cfg.n_max : 10;
    if (cfg.n >= 0) lo = hi = cfg.n;
    if (lo < n_min || hi < lo)
        throw std::invalid_argument("table: invalid row range for family " + cfg.family);

    if (cfg.format == "csv") {
        std::ostringstream os;
        for (int n = lo; n <= hi; ++n) {
            Poly const p = table_row(cfg, n);
            os << n;
            for (int k = 0; k <= p.degree(); ++k) os << "," << csv_cell(p.coeff(k));
            os << "\n";
        }
        emit(cfg, os.str());
        return 0;
    }
    if (cfg.format == "json") {
        json rows = json::array();
        for (int n = lo; n <= hi; ++n) rows.push_back({{"n", n}, {"coeffs", poly_to_json(table_row(cfg, n))}});
        json doc = {{"family", cfg.family}, {"rows", rows}};
        emit(cfg, doc.dump(2) + "\n");
        return 0;
    }
    throw std::invalid_argument("unknown format: " + cfg.format);
}

// ---- verify ----------------------------------------------------------------

int default_verify_nmax(std::string const& suite) {
    if (suite == "stembridge") return 8;
    return 12;  // special-values, cvijovic, transforms, all
}

Report run_suite(RunConfig const& cfg, std::string const& suite, int n_max) {
    if (suite == "stembridge") return verify_stembridge(n_max, cfg.brute_cap);
    if (suite == "special-values") return special_values(n_max, cfg.series_order);
    if (suite == "cvijovic") return cvijovic_suite(n_max);
    if (suite == "transforms") return transform_roundtrip(n_max);
    if (suite == "all") {
        Report rep = verify_stembridge(std::min(n_max, 8), cfg.brute_cap);
        rep.merge(special_values(n_max, cfg.series_order));
        rep.merge(cvijovic_suite(n_max));
        rep.merge(transform_roundtrip(n_max));
        rep.merge(oracle_equivalence(std::min(n_max, 8), cfg.brute_cap));
        return rep;
    }
    throw std::invalid_argument("unknown suite: " + suite +
                                " (expected stembridge, special-values, cvijovic, transforms, all)");
}

int cmd_verify(RunConfig const& cfg) {
    if (cfg.format == "csv") throw std::invalid_argument("verify reports are JSON only");
    int const n_max = cfg.n_max >= 0 ? cfg.n_max : default_verify_nmax(cfg.suite);
    Report const rep = run_suite(cfg, cfg.suite, n_max);
    json doc = {{"suite", cfg.suite}, {"n_max", n_max}, {"checks", rep.to_json()}, {"pass", rep.all_pass()}};
    emit(cfg, doc.dump(2) + "\n");
    return rep.all_pass() ? 0 : 1;
}

// ---- certify ---------------------------------------------------------------

// Runs work(i) for i in [0, count) on `jobs` threads; results land in
// index-addressed slots so output order never depends on scheduling.
template <typename Work>
void run_indexed(std::size_t count, int jobs, Work&& work) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) work(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mu;
    auto body = [&] {
        for (;;) {
            std::size_t const i = next.fetch_add(1);
            if (i >= count) return;
            try {
                work(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(body);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

int default_certify_nmax(std::string const& check) {
    if (check == "rz") return 30;
    if (check == "interleave") return 20;
    if (check == "chains") return 10;
    if (check == "compat") return 15;
    throw std::invalid_argument("unknown check: " + check + " (expected rz, interleave, chains, compat)");
}

int cmd_certify(RunConfig const& cfg) {
    if (cfg.format == "csv") throw std::invalid_argument("certificates are JSON only");
    int const n_max = cfg.n_max >= 0 ? cfg.n_max : default_certify_nmax(cfg.check);
    int const n_lo = cfg.n >= 0 ? cfg.n : (cfg.check == "chains" ? 1 : 2);
    int const n_hi = cfg.n >= 0 ? cfg.n : n_max;
    if (n_hi < n_lo) throw std::invalid_argument("certify: empty index range");

    std::vector<int> ns;
    for (int n = n_lo; n <= n_hi; ++n) ns.push_back(n);

    if (cfg.check == "chains") {
        std::vector<Report> slots(ns.size());
        run_indexed(ns.size(), cfg.jobs, [&](std::size_t i) { slots[i] = zero_chains_at(ns[i]); });
        Report rep;
        for (auto& s : slots) rep.merge(std::move(s));
        json doc = {{"check", "chains"}, {"n_max", n_max}, {"checks", rep.to_json()}, {"pass", rep.all_pass()}};
        emit(cfg, doc.dump(2) + "\n");
        return rep.all_pass() ? 0 : 1;
    }

    CompatibilityOptions opts;
    opts.seed = cfg.seed;
    std::vector<std::vector<NamedCertificate>> slots(ns.size());
    run_indexed(ns.size(), cfg.jobs, [&](std::size_t i) {
        if (cfg.check == "rz")
            slots[i] = rz_at(ns[i]);
        else if (cfg.check == "interleave")
            slots[i] = interleave_at(ns[i]);
        else if (cfg.check == "compat")
            slots[i] = compat_at(ns[i], opts);
        else
            throw std::invalid_argument("unknown check: " + cfg.check);
    });

    bool all_pass = true;
    json certs = json::array();
    for (auto& slot : slots)
        for (auto& named : slot) {
            all_pass = all_pass && named.cert.pass;
            certs.push_back({{"n", named.n}, {"name", named.name}, {"certificate", named.cert.to_json()}});
        }
    json doc = {{"check", cfg.check}, {"n_max", n_max}, {"certificates", certs}, {"pass", all_pass}};
    if (cfg.check == "compat") doc["seed"] = cfg.seed;
    emit(cfg, doc.dump(2) + "\n");
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Eulerian polynomials of types A/B/D and certified facts about their zeros"};
    app.require_subcommand(1);

    RunConfig cfg;

    auto add_common = [&cfg](CLI::App* sub) {
        sub->add_option("--n", cfg.n, "single index instead of a range")->envname("EULERCERT_N");
        sub->add_option("--n-max", cfg.n_max, "largest index (suite-specific default)")->envname("EULERCERT_N_MAX");
        sub->add_option("--brute-cap", cfg.brute_cap, "enumeration budget cap (default 10)")
            ->envname("EULERCERT_BRUTE_CAP");
        sub->add_option("--series-order", cfg.series_order, "truncation order for series-based checks")
            ->envname("EULERCERT_SERIES_ORDER");
        sub->add_option("--format", cfg.format, "csv or json")->envname("EULERCERT_FORMAT");
        sub->add_option("--out", cfg.out_path, "write to file instead of stdout")->envname("EULERCERT_OUT");
        sub->add_option("--seed", cfg.seed, "seed for randomized spot-checks")->envname("EULERCERT_SEED");
        sub->add_option("--jobs", cfg.jobs, "worker threads for per-index work")->envname("EULERCERT_JOBS");
    };

    CLI::App* table = app.add_subcommand("table", "coefficient tables for A, B, D, P, Q, a, b, d");
    table->add_option("--family", cfg.family, "family selector")->required()->envname("EULERCERT_FAMILY");
    table->add_flag("--brute", cfg.brute, "build A/B/D rows by enumeration instead of recurrences");
    add_common(table);

    CLI::App* verify = app.add_subcommand("verify", "identity verification suites (JSON report)");
    verify->add_option("--suite", cfg.suite, "stembridge | special-values | cvijovic | transforms | all")
        ->required()
        ->envname("EULERCERT_SUITE");
    add_common(verify);

    CLI::App* certify = app.add_subcommand("certify", "root-location certificates (JSON)");
    certify->add_option("--check", cfg.check, "rz | interleave | chains | compat")
        ->required()
        ->envname("EULERCERT_CHECK");
    add_common(certify);

    try {
        app.parse(argc, argv);
    } catch (CLI::CallForHelp const& e) {
        return app.exit(e);
    } catch (CLI::ParseError const& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*table) return cmd_table(cfg);
        if (*verify) {
            if (verify->get_option("--format")->count() == 0) cfg.format = "json";
            return cmd_verify(cfg);
        }
        if (*certify) {
            if (certify->get_option("--format")->count() == 0) cfg.format = "json";
            return cmd_certify(cfg);
        }
        return 2;
    } catch (capacity_error const& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return 3;
    } catch (std::invalid_argument const& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return 2;
    } catch (std::exception const& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
