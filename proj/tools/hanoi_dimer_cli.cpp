// hanoi-dimer: command-line front end.
//
// Exit codes: 0 success, 1 mismatch or violation, 2 usage error, 3 resource cap.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hanoi_dimer/cache.hpp"
#include "hanoi_dimer/hanoi_dimer.hpp"
#include "hanoi_dimer/reproduce.hpp"

namespace hd = hanoi_dimer;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct RunConfig {
    int d = 3;
    int n = 1;
    int k = 6;
    int precision = hd::kDefaultPrecision;
    int digits = 15;
    std::string format = "text";
    std::string cache_dir;
    std::uint64_t vertex_cap = hd::kDefaultVertexCap;
    std::size_t memo_cap = hd::OracleLimits{}.max_memo_entries;
    double digit_cap = hd::kDefaultDigitCap;
    std::size_t term_budget = hd::kDefaultTermBudget;
    int max_d = hd::kDefaultMaxCensusDimension;
    std::string constraint;
    std::string emit_graph;
    std::string which = "all";
    std::string out_file;

    void check() const {
        if (d < 2) throw hd::DomainError("--d must be >= 2");
        if (vertex_cap == 0 || memo_cap == 0 || digit_cap <= 0 || term_budget == 0 || max_d < 2) {
            throw hd::DomainError("caps must be positive");
        }
    }

    hd::OracleLimits oracle_limits() const {
        hd::OracleLimits lim;
        lim.max_memo_entries = memo_cap;
        return lim;
    }
};

std::vector<std::string> decimal_strings(const std::vector<hd::Integer>& xs) {
    std::vector<std::string> out;
    for (const auto& x : xs) out.push_back(x.get_str());
    return out;
}

int cmd_gen_recursions(const RunConfig& cfg, hd::SystemCache& cache) {
    const auto& sys = cache.get(cfg.d);
    if (!cfg.out_file.empty()) {
        std::ofstream out(cfg.out_file, std::ios::binary);
        if (!out) throw hd::Error("cannot write " + cfg.out_file);
        hd::write_system(out, sys);
    } else {
        hd::write_system(std::cout, sys);
    }
    return 0;
}

int cmd_count(const RunConfig& cfg, hd::SystemCache& cache) {
    if (cfg.n < 0) throw hd::DomainError("--n must be >= 0");
    const auto vs = hd::evolve_to(cache.get(cfg.d), cfg.n, cfg.digit_cap);
    const auto& v = vs.back();
    if (cfg.format == "json") {
        Json j;
        j["d"] = v.d;
        j["n"] = v.n;
        j["c"] = decimal_strings(v.c);
        j["M"] = v.M.get_str();
        std::cout << j.dump(2) << '\n';
    } else if (cfg.format == "csv") {
        std::cout << "d,n";
        for (std::size_t k = 0; k < v.c.size(); ++k) std::cout << ",c" << k;
        std::cout << ",M\n" << v.d << ',' << v.n;
        for (const auto& x : v.c) std::cout << ',' << x;
        std::cout << ',' << v.M << '\n';
    } else {
        for (std::size_t k = 0; k < v.c.size(); ++k) std::cout << 'c' << k << " = " << v.c[k] << '\n';
        std::cout << "M = " << v.M << '\n';
    }
    return 0;
}

int cmd_oracle(const RunConfig& cfg) {
    const auto g = hd::build(cfg.d, cfg.n, cfg.vertex_cap);
    if (!cfg.emit_graph.empty()) {
        std::ofstream out(cfg.emit_graph, std::ios::binary);
        if (!out) throw hd::Error("cannot write " + cfg.emit_graph);
        hd::write_edge_csv(out, g);
    }
    const auto oc = hd::boundary_class_vector(g, cfg.oracle_limits());
    Json j;
    j["d"] = cfg.d;
    j["n"] = cfg.n;
    j["M"] = oc.M.get_str();
    j["c"] = decimal_strings(oc.c);
    if (!cfg.constraint.empty()) {
        j["constraint"] = cfg.constraint;
        j["count"] = hd::count_constrained(g, hd::parse_constraint(cfg.constraint), cfg.oracle_limits()).get_str();
    }
    std::cout << j.dump(2) << '\n';
    return 0;
}

int cmd_verify(const RunConfig& cfg, hd::SystemCache& cache) {
    const auto vs = hd::evolve_to(cache.get(cfg.d), cfg.n, cfg.digit_cap);
    for (int n = 0; n <= cfg.n; ++n) {
        const auto oc = hd::boundary_class_vector(hd::build(cfg.d, n, cfg.vertex_cap), cfg.oracle_limits());
        const auto& v = vs[static_cast<std::size_t>(n)];
        for (std::size_t k = 0; k < v.c.size(); ++k) {
            if (oc.c[k] != v.c[k]) {
                std::cout << "d=" << cfg.d << " n=" << n << " c" << k << " differs: recursion " << v.c[k] << ", oracle "
                          << oc.c[k] << '\n';
                return kExitMismatch;
            }
        }
        if (oc.M != v.M) {
            std::cout << "d=" << cfg.d << " n=" << n << " M differs: recursion " << v.M << ", oracle " << oc.M << '\n';
            return kExitMismatch;
        }
        std::cout << "d=" << cfg.d << " n=" << n << " match (M = " << v.M << ")\n";
    }
    return 0;
}

int cmd_ratios(const RunConfig& cfg, hd::SystemCache& cache) {
    if (cfg.n < 1) throw hd::DomainError("--max-n must be >= 1");
    if (cfg.digits < 1) throw hd::DomainError("--digits must be >= 1");
    const auto vs = hd::evolve_to(cache.get(cfg.d), cfg.n, cfg.digit_cap);
    const auto tr = hd::ratios(std::vector<hd::BoundaryClassVector>(vs.begin() + 1, vs.end()));
    const auto er = tr.eps_ratios();
    auto dec = [&](const hd::Rational& q) { return hd::render_decimal(q, cfg.digits, hd::Rounding::HalfEven); };
    if (cfg.format == "json") {
        Json j;
        j["d"] = cfg.d;
        j["digits"] = cfg.digits;
        Json stages = Json::array();
        for (std::size_t i = 0; i < tr.stages.size(); ++i) {
            Json s;
            s["n"] = tr.stages[i];
            Json r = Json::array();
            for (const auto& q : tr.ratios[i]) r.push_back(dec(q));
            s["r"] = r;
            s["eps"] = dec(tr.eps[i]);
            if (i < er.size()) s["eps_ratio"] = dec(er[i]);
            stages.push_back(s);
        }
        j["stages"] = stages;
        std::cout << j.dump(2) << '\n';
    } else {
        for (std::size_t i = 0; i < tr.stages.size(); ++i) {
            std::cout << "n=" << tr.stages[i] << '\n';
            for (std::size_t r = 0; r < tr.ratios[i].size(); ++r) {
                std::cout << "  r" << r << " = c" << r << "/c" << r + 1 << " = " << dec(tr.ratios[i][r]) << '\n';
            }
            std::cout << "  eps = " << dec(tr.eps[i]) << '\n';
            if (i < er.size()) std::cout << "  eps(n+1)/eps(n)^2 = " << dec(er[i]) << '\n';
        }
    }
    return 0;
}

int cmd_entropy(const RunConfig& cfg, hd::SystemCache& cache) {
    const auto vs = hd::evolve_to(cache.get(cfg.d), cfg.k, cfg.digit_cap);
    const auto b = hd::bounds(cfg.d, cfg.k, vs, cfg.precision);
    if (!b.warning.empty()) std::cerr << "warning: " << b.warning << '\n';
    if (cfg.format == "json") {
        Json j;
        j["d"] = b.d;
        j["k"] = b.k;
        j["precision"] = cfg.precision;
        j["lower"] = b.lower.str();
        j["upper"] = b.upper.str();
        j["certified_digits"] = b.certified_digits;
        j["certified"] = b.certified_prefix();
        j["lambda_digits"] = b.lambda_digits;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "lower     " << b.lower.str() << "\nupper     " << b.upper.str() << "\ncertified "
                  << b.certified_prefix() << " (" << b.certified_digits << " digits)\n";
    }
    return 0;
}

int cmd_appendix(const RunConfig& cfg, hd::SystemCache& cache) {
    const auto& sys = cache.get(cfg.d);
    std::vector<hd::CertificateReport> reports;
    const bool all = cfg.which == "all";
    if (all || cfg.which == "omega") reports.push_back(hd::omega_ascending_certificate(sys, cfg.term_budget));
    if (all || cfg.which == "alpha") reports.push_back(hd::alpha_descending_certificate(sys, cfg.term_budget));
    if (all || cfg.which == "contraction") {
        reports.push_back(hd::quadratic_contraction_certificate(sys, cfg.term_budget));
    }

    int rc = 0;
    Json list = Json::array();
    for (const auto& r : reports) {
        if (r.status == hd::CertificateStatus::Fail) rc = kExitMismatch;
        if (r.status == hd::CertificateStatus::NotAttempted && rc == 0) rc = kExitResource;
        if (cfg.format == "json") {
            Json j;
            j["name"] = r.name;
            j["status"] = hd::to_string(r.status);
            j["terms"] = r.terms;
            j["detail"] = r.detail;
            list.push_back(j);
        } else {
            std::cout << r.name << ": " << hd::to_string(r.status) << " (" << r.terms << " terms)";
            if (!r.detail.empty()) std::cout << " " << r.detail;
            std::cout << '\n';
        }
    }
    if (cfg.format == "json") {
        Json j;
        j["d"] = cfg.d;
        j["certificates"] = list;
        std::cout << j.dump(2) << '\n';
    }
    return rc;
}

int cmd_reproduce(hd::SystemCache& cache) {
    const auto s = hd::reproduce(std::cout, [&](int d) { return cache.get(d); });
    return s.ok() ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dimer-monomer counts on generalized Tower of Hanoi graphs"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--cache-dir", cfg.cache_dir, "Directory for cached recursion systems");
        sub->add_option("--max-d", cfg.max_d, "Largest d the subset census may enumerate")->capture_default_str();
    };
    auto add_d = [&](CLI::App* sub) { sub->add_option("--d", cfg.d, "Dimension d >= 2")->required(); };
    auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(allowed))->capture_default_str();
    };

    auto* gen = app.add_subcommand("gen-recursions", "Generate (or load) the recursion system for d");
    add_d(gen);
    add_common(gen);
    gen->add_option("--out", cfg.out_file, "Write to this file instead of stdout");

    auto* count = app.add_subcommand("count", "Exact boundary class counts at stage n");
    add_d(count);
    count->add_option("--n", cfg.n, "Stage")->required();
    add_format(count, {"text", "json", "csv"});
    add_common(count);
    count->add_option("--digit-cap", cfg.digit_cap, "Refuse stages whose counts exceed this many digits");

    auto* oracle = app.add_subcommand("oracle", "Brute-force counts on an explicit graph");
    add_d(oracle);
    oracle->add_option("--n", cfg.n, "Stage")->required();
    oracle->add_option("--constraint", cfg.constraint, "Per-corner status string, e.g. mmddf");
    oracle->add_option("--emit-graph", cfg.emit_graph, "Write the edge list as CSV to this file");
    oracle->add_option("--vertex-cap", cfg.vertex_cap)->capture_default_str();
    oracle->add_option("--memo-cap", cfg.memo_cap)->capture_default_str();

    auto* verify = app.add_subcommand("verify", "Compare recursion output with the oracle up to stage n");
    add_d(verify);
    verify->add_option("--n", cfg.n, "Largest stage")->required();
    verify->add_option("--vertex-cap", cfg.vertex_cap)->capture_default_str();
    verify->add_option("--memo-cap", cfg.memo_cap)->capture_default_str();
    add_common(verify);

    auto* rat = app.add_subcommand("ratios", "Ratio traces r_j(n) = c_j/c_{j+1} and eps");
    add_d(rat);
    rat->add_option("--max-n", cfg.n, "Largest stage")->required();
    rat->add_option("--digits", cfg.digits, "Decimal places (round half even)")->capture_default_str();
    add_format(rat, {"text", "json"});
    add_common(rat);

    auto* ent = app.add_subcommand("entropy", "Certified entropy-per-site bounds");
    add_d(ent);
    ent->add_option("--k", cfg.k, "Anchor stage")->capture_default_str();
    ent->add_option("--precision", cfg.precision, "Decimal places")->capture_default_str();
    add_format(ent, {"text", "json"});
    add_common(ent);

    auto* app_check = app.add_subcommand("appendix-check", "Symbolic monotonicity and contraction certificates");
    add_d(app_check);
    app_check->add_option("--which", cfg.which)
        ->check(CLI::IsMember({"omega", "alpha", "contraction", "all"}))
        ->capture_default_str();
    app_check->add_option("--term-budget", cfg.term_budget)->capture_default_str();
    add_format(app_check, {"text", "json"});
    add_common(app_check);

    auto* repro = app.add_subcommand("reproduce", "Run the full pipeline for d = 2, 3, 4 against reference values");
    add_common(repro);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        cfg.check();
        hd::SystemCache cache(hd::resolve_cache_dir(cfg.cache_dir), &std::cerr, cfg.max_d);
        if (gen->parsed()) return cmd_gen_recursions(cfg, cache);
        if (count->parsed()) return cmd_count(cfg, cache);
        if (oracle->parsed()) return cmd_oracle(cfg);
        if (verify->parsed()) return cmd_verify(cfg, cache);
        if (rat->parsed()) return cmd_ratios(cfg, cache);
        if (ent->parsed()) return cmd_entropy(cfg, cache);
        if (app_check->parsed()) return cmd_appendix(cfg, cache);
        if (repro->parsed()) return cmd_reproduce(cache);
    } catch (const hd::ResourceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitResource;
    } catch (const hd::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const hd::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitMismatch;
    }
    return kExitUsage;
}
