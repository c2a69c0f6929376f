// griff: exact calculator and verification driver for stable heights of
// hypersurface pencils with semihomogeneous singularities.
//
// Subcommands: verify, height, milnor, euler. Exit codes: 0 pass/feasible,
// 1 identity or route failure, 2 infeasible input, 64 malformed input.
// GRIFF_THREADS (positive integer, default 1) caps sweep parallelism.

#include <chrono>
#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "griff/checks.hpp"
#include "griff/parallel.hpp"
#include "griff/scenario.hpp"

using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitInputError = 64;

struct OutputOptions {
    bool as_json = false;
    bool decimal = false;
};

struct Stopwatch {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

std::string render(const griff::Rational& q, const OutputOptions& opts) {
    std::string s = q.to_string();
    if (opts.decimal && !q.is_integer()) s += " [approx " + q.to_decimal_string(6) + "]";
    return s;
}

json checks_to_json(const std::vector<griff::CheckResult>& checks) {
    json arr = json::array();
    for (const auto& c : checks) {
        arr.push_back({{"name", c.name},
                       {"pass", c.pass},
                       {"cases", c.cases},
                       {"detail", c.detail},
                       {"elapsed_ms", c.elapsed_ms}});
    }
    return arr;
}

int run_verify(const griff::SweepBounds& bounds, const OutputOptions& opts) {
    const auto checks = griff::run_verification_checks(bounds);
    bool all_pass = true;
    double total_ms = 0.0;
    for (const auto& c : checks) {
        all_pass = all_pass && c.pass;
        total_ms += c.elapsed_ms;
    }
    if (opts.as_json) {
        json out = {{"command", "verify"},
                    {"bounds",
                     {{"max_n", bounds.max_n},
                      {"max_d", bounds.max_d},
                      {"deg_range", bounds.deg_range},
                      {"threads", bounds.threads}}},
                    {"checks", checks_to_json(checks)},
                    {"pass", all_pass},
                    {"timing_ms", total_ms}};
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& c : checks) {
            std::printf("%-36s %8lld cases %10.2f ms   %s\n", c.name.c_str(), c.cases, c.elapsed_ms,
                        c.pass ? "pass" : "FAIL");
            if (!c.pass) std::printf("    counterexample: %s\n", c.detail.c_str());
        }
        std::printf("%s: %zu checks, %.2f ms total\n", all_pass ? "all passed" : "FAILURES PRESENT",
                    checks.size(), total_ms);
    }
    return all_pass ? kExitPass : kExitFailure;
}

int run_height(const std::string& path, const OutputOptions& opts) {
    const Stopwatch watch;
    const griff::Scenario s = griff::scenario_from_json(griff::load_json_file(path));
    const griff::HeightReport report = griff::evaluate_height(s.geom, s.fibers);
    if (opts.as_json) {
        const json checks = json::array(
            {{{"name", "critical_count"},
              {"pass", report.feasible},
              {"lhs", report.count_lhs.to_string()},
              {"rhs", griff::rational_to_json(report.count_rhs)}},
             {{"name", "height_routes_agree"},
              {"pass", report.routes_agree},
              {"lhs", griff::rational_to_json(report.stable_height_weights)},
              {"rhs", griff::rational_to_json(report.stable_height_integrals)}}});
        json out = {{"command", "height"},
                    {"scenario", griff::scenario_to_json(s)},
                    {"report", griff::height_report_to_json(report)},
                    {"checks", checks},
                    {"timing_ms", watch.ms()}};
        if (opts.decimal) {
            out["approx"] = {{"ht_int", report.ht_int.to_decimal_string(6)},
                             {"stable_height", report.stable_height_weights.to_decimal_string(6)}};
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "scenario: N=" << s.geom.N << " d=" << s.geom.d
                  << " deg_E=" << s.geom.deg_e.to_string() << " deg_M=" << s.geom.deg_m.to_string()
                  << "\n";
        std::cout << "fibers:";
        if (s.fibers.entries.empty()) std::cout << " (none)";
        for (const auto& f : s.fibers.entries) std::cout << " " << f.count << "x delta=" << f.delta;
        std::cout << "\n";
        std::cout << "ht_int = " << render(report.ht_int, opts) << "\n";
        std::cout << "critical count: sum count*(delta-1)^N = " << report.count_lhs.to_string()
                  << ", (N+1)(d-1)^N ht_int = " << render(report.count_rhs, opts) << "  ("
                  << (report.feasible ? "feasible" : "INFEASIBLE") << ")\n";
        std::cout << "stable height (weight formula)  = " << render(report.stable_height_weights, opts)
                  << "\n";
        std::cout << "stable height (Chow integrals)  = " << render(report.stable_height_integrals, opts)
                  << "\n";
        std::cout << "routes agree: " << (report.routes_agree ? "yes" : "NO") << "\n";
        if (!report.feasible)
            std::cout << "warning: scenario violates the critical-count identity; heights reported anyway\n";
    }
    if (!report.routes_agree) return kExitFailure;
    return report.feasible ? kExitPass : kExitInfeasible;
}

int run_milnor(const griff::HomogeneousPoly& F, const OutputOptions& opts, int threads) {
    const Stopwatch watch;
    const griff::MilnorResult res = griff::milnor_number(F, threads);
    const griff::Integer reference =
        griff::Integer::pow(griff::Integer(F.degree() - 1), static_cast<unsigned>(F.num_vars()));
    const bool match = res.isolated && res.milnor_number == reference;
    if (opts.as_json) {
        json dims = json::array();
        for (long long d : res.dims.dims) dims.push_back(d);
        json out = {{"command", "milnor"},
                    {"polynomial", F.to_string()},
                    {"num_vars", F.num_vars()},
                    {"degree", F.degree()},
                    {"socle_bound", res.dims.socle_bound},
                    {"dims", dims},
                    {"isolated", res.isolated},
                    {"reference", reference.to_string()},
                    {"match", match},
                    {"timing_ms", watch.ms()}};
        if (res.isolated) out["milnor_number"] = res.milnor_number.to_string();
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "polynomial: " << F.to_string() << "  (vars=" << F.num_vars()
                  << ", degree=" << F.degree() << ")\n";
        std::cout << "quotient dims, degree 0.." << res.dims.dims.size() - 1 << ":";
        for (long long d : res.dims.dims) std::cout << " " << d;
        std::cout << "\n";
        if (res.isolated) {
            std::cout << "Milnor number = " << res.milnor_number.to_string() << "\n";
            std::cout << "reference (delta-1)^N = " << reference.to_string() << "  ("
                      << (match ? "match" : "MISMATCH") << ")\n";
        } else {
            std::cout << "non-isolated singularity; projective tangent cone is singular\n";
        }
    }
    if (!res.isolated) return kExitInfeasible;
    return match ? kExitPass : kExitFailure;
}

int run_euler_exceptional(int n, int delta, const OutputOptions& opts) {
    const griff::Rational closed = griff::chi_exceptional(n, delta);
    const griff::Rational via_hyp =
        n >= 2 ? griff::chi_hypersurface(n - 1, delta) : closed;
    const bool match = closed == via_hyp;
    if (opts.as_json) {
        json out = {{"command", "euler"},       {"kind", "exceptional"},
                    {"N", n},                   {"delta", delta},
                    {"closed_form", griff::rational_to_json(closed)},
                    {"hypersurface_route", griff::rational_to_json(via_hyp)},
                    {"match", match}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "chi(exceptional intersection) closed form = " << render(closed, opts) << "\n";
        std::cout << "chi via smooth hypersurface in P^" << n - 1 << "      = " << render(via_hyp, opts)
                  << "  (" << (match ? "match" : "MISMATCH") << ")\n";
    }
    return match ? kExitPass : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact stable-height calculator and identity verifier for hypersurface pencils"};
    app.require_subcommand(1);
    app.fallthrough();  // accept --json / --decimal after the subcommand too

    OutputOptions opts;
    app.add_flag("--json", opts.as_json, "emit a JSON report on stdout");
    app.add_flag("--decimal", opts.decimal, "append approximate 6-digit decimal renderings");

    // verify
    auto* verify = app.add_subcommand("verify", "run the identity sweeps");
    griff::SweepBounds bounds;
    bounds.threads = griff::env_thread_cap();
    verify->add_option("--max-n", bounds.max_n, "largest fiber dimension N")->check(CLI::PositiveNumber);
    verify->add_option("--max-d", bounds.max_d, "largest relative degree d")->check(CLI::Range(2, 1000));
    verify->add_option("--deg-range", bounds.deg_range, "sweep deg_E, deg_M over [-range, range]")
        ->check(CLI::NonNegativeNumber);
    std::string chern_sign = "minus";
    verify->add_option("--chern-sign", chern_sign, "twist sign of the relative cotangent Chern class")
        ->check(CLI::IsMember({"minus", "plus"}))
        ->group("");  // self-test hook, hidden from help

    // height
    auto* height = app.add_subcommand("height", "evaluate a scenario file");
    std::string scenario_path;
    height->add_option("file", scenario_path, "scenario JSON file")->required();

    // milnor
    auto* milnor = app.add_subcommand("milnor", "Milnor number of a homogeneous singularity");
    std::vector<int> fermat_args;
    std::string poly_path;
    auto* fermat_opt = milnor->add_option("--fermat", fermat_args,
                                          "use the Fermat form: N delta")->expected(2);
    milnor->add_option("file", poly_path, "polynomial JSON file (array of {exponents, coeff})")
        ->excludes(fermat_opt);

    // euler
    auto* euler = app.add_subcommand("euler", "Euler-characteristic evaluators");
    euler->require_subcommand(1);
    auto* hyp = euler->add_subcommand("hypersurface", "chi of a smooth hypersurface in P^n");
    int hyp_dim = 2, hyp_degree = 2;
    hyp->add_option("--dim", hyp_dim, "ambient projective dimension n")->required()->check(CLI::PositiveNumber);
    hyp->add_option("--degree", hyp_degree, "hypersurface degree")->required()->check(CLI::PositiveNumber);
    auto* exc = euler->add_subcommand("exceptional", "chi of the exceptional-stratum intersection");
    int exc_n = 2, exc_delta = 2;
    exc->add_option("--n", exc_n, "fiber dimension N")->required()->check(CLI::PositiveNumber);
    exc->add_option("--delta", exc_delta, "singular point multiplicity")->required()->check(CLI::Range(2, 1000000));
    auto* alphax = euler->add_subcommand("alpha-x", "SNC-fiber correction from stratification data");
    std::string strat_path;
    alphax->add_option("file", strat_path, "stratification JSON file")->required();
    auto* chisum = euler->add_subcommand("chi-sum", "Euler-characteristic sum over the semistable cover");
    int chisum_n = 2;
    long long chisum_deg = 1;
    std::string chisum_fibers_path;
    chisum->add_option("--n", chisum_n, "fiber dimension N")->required()->check(CLI::PositiveNumber);
    chisum->add_option("--deg-sigma", chisum_deg, "degree of the covering")->required()->check(CLI::PositiveNumber);
    chisum->add_option("file", chisum_fibers_path, "fiber data JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;
    }

    try {
        if (verify->parsed()) {
            bounds.chern_e_sign = chern_sign == "plus" ? +1 : -1;
            return run_verify(bounds, opts);
        }
        if (height->parsed()) {
            return run_height(scenario_path, opts);
        }
        if (milnor->parsed()) {
            const int threads = griff::env_thread_cap();
            if (!fermat_args.empty()) {
                if (fermat_args[0] < 1 || fermat_args[1] < 2)
                    throw std::invalid_argument("--fermat expects N >= 1 and delta >= 2");
                return run_milnor(griff::fermat(fermat_args[0], fermat_args[1]), opts, threads);
            }
            if (poly_path.empty()) throw std::invalid_argument("milnor: give a polynomial file or --fermat N delta");
            return run_milnor(griff::polynomial_from_json(griff::load_json_file(poly_path)), opts, threads);
        }
        if (euler->parsed()) {
            if (hyp->parsed()) {
                const griff::Rational chi = griff::chi_hypersurface(hyp_dim, hyp_degree);
                if (opts.as_json) {
                    json out = {{"command", "euler"},
                                {"kind", "hypersurface"},
                                {"dim", hyp_dim},
                                {"degree", hyp_degree},
                                {"chi", griff::rational_to_json(chi)}};
                    std::cout << out.dump(2) << "\n";
                } else {
                    std::cout << "chi(smooth degree-" << hyp_degree << " hypersurface in P^" << hyp_dim
                              << ") = " << render(chi, opts) << "\n";
                }
                return kExitPass;
            }
            if (exc->parsed()) return run_euler_exceptional(exc_n, exc_delta, opts);
            if (alphax->parsed()) {
                const griff::StratificationData data =
                    griff::stratification_from_json(griff::load_json_file(strat_path));
                const griff::Rational corr = griff::snc_fiber_correction(data);
                if (opts.as_json) {
                    json out = {{"command", "euler"},
                                {"kind", "alpha-x"},
                                {"correction", griff::rational_to_json(corr)}};
                    std::cout << out.dump(2) << "\n";
                } else {
                    std::cout << "SNC fiber correction = " << render(corr, opts) << "\n";
                }
                return kExitPass;
            }
            if (chisum->parsed()) {
                const griff::SingularFiberData fibers =
                    griff::fibers_from_json(griff::load_json_file(chisum_fibers_path));
                const griff::Rational sum = griff::chi_sum_semistable_cover(chisum_n, chisum_deg, fibers);
                if (opts.as_json) {
                    json out = {{"command", "euler"},
                                {"kind", "chi-sum"},
                                {"N", chisum_n},
                                {"deg_sigma", chisum_deg},
                                {"chi_sum", griff::rational_to_json(sum)}};
                    std::cout << out.dump(2) << "\n";
                } else {
                    std::cout << "chi sum over the semistable cover = " << render(sum, opts) << "\n";
                }
                return kExitPass;
            }
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitInputError;
}
