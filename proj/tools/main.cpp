#include "symnorm/matrixforms.hpp"
#include "symnorm/norms.hpp"
#include "symnorm/suites.hpp"
#include "symnorm/sympoly.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>

using namespace symnorm;
using json = nlohmann::ordered_json;

namespace {

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + output_path);
    out << text;
}

Family parse_family(const std::string& s) {
    if (s == "F") return Family::F;
    if (s == "G") return Family::G;
    if (s == "H") return Family::H;
    throw CLI::ValidationError("--family", "expected F, G or H");
}

Route parse_route(const std::string& s) {
    if (s == "gf" || s == "generating-function") return Route::GeneratingFunction;
    if (s == "ci" || s == "cycle-index") return Route::CycleIndex;
    if (s == "bf" || s == "brute-force") return Route::BruteForce;
    throw CLI::ValidationError("--route", "expected gf, ci or bf");
}

int run_compute(const std::string& family, int k, int r, int n, const std::string& basis,
                const std::string& route_name, const std::string& matrix_path,
                const std::string& format, const std::string& output) {
    std::string result;
    if (!matrix_path.empty()) {
        std::ifstream in(matrix_path);
        if (!in) throw std::runtime_error("cannot open matrix file: " + matrix_path);
        const RatMatrix a = RatMatrix::read(in);
        const Family fam = parse_family(family);
        if (fam == Family::F) throw CLI::ValidationError("--family", "matrix input supports G and H");
        const Rat via_traces = family_from_traces(fam, k, r, a);
        const Rat via_entries = family_from_entries(fam, k, r, a);
        if (via_traces != via_entries)
            throw std::runtime_error("internal disagreement: traces " + via_traces.str() +
                                     " vs entries " + via_entries.str());
        result = via_traces.str();
    } else if (family == "e") {
        result = elementary(k, n).str();
    } else if (family == "p") {
        result = power_sum(k, n).str();
    } else {
        const Family fam = parse_family(family);
        MPoly value;
        if (basis == "p") {
            const Route route = route_name.empty() ? Route::CycleIndex : parse_route(route_name);
            if (route == Route::GeneratingFunction)
                throw CLI::ValidationError("--basis", "p-basis requires route ci or bf");
            if (fam == Family::F)
                throw CLI::ValidationError("--family", "F has no p-basis route");
            value = fam == Family::G ? compute_G_pbasis(k, r, route)
                                     : compute_H_pbasis(k, r, route);
        } else {
            const Route route =
                route_name.empty() ? Route::GeneratingFunction : parse_route(route_name);
            if (fam == Family::F)
                value = compute_F(k, r, n);
            else
                value = fam == Family::G ? compute_G(k, r, n, route) : compute_H(k, r, n, route);
        }
        result = value.str();
    }

    if (format == "json") {
        json doc{{"schema", "1"},   {"command", "compute"}, {"family", family}, {"k", k},
                 {"r", r},          {"n", n},               {"basis", basis},   {"result", result}};
        emit(doc.dump(2) + "\n", output);
    } else {
        emit(result + "\n", output);
    }
    return 0;
}

int run_verify(const VerifyConfig& cfg, const std::vector<std::string>& suites,
               const std::string& format, const std::string& output) {
    const std::vector<CheckResult> results = run_verify_suites(cfg, suites);
    int failed = 0;
    for (const CheckResult& c : results)
        if (!c.pass) ++failed;

    if (format == "json") {
        emit(verify_report_json(cfg, results), output);
    } else if (format == "csv") {
        emit(verify_report_csv(results), output);
    } else {
        std::ostringstream out;
        for (const CheckResult& c : results) {
            out << (c.pass ? "PASS" : "FAIL") << "  [" << c.suite << "] " << c.name;
            if (!c.detail.empty()) out << "  (" << c.detail << ")";
            out << "\n";
        }
        out << results.size() - failed << "/" << results.size() << " checks passed\n";
        emit(out.str(), output);
    }
    return failed == 0 ? 0 : 1;
}

int run_fuzz(const std::string& family, int r, int n, int pairs, std::uint64_t seed,
             const TheoremOptions& opt, const std::string& format, const std::string& output) {
    std::vector<FuzzReport> reports;
    std::vector<std::pair<TheoremFamily, int>> jobs;
    if (family == "all") {
        jobs = {{TheoremFamily::A_F, std::max(r, 1)},
                {TheoremFamily::T1_G, r},
                {TheoremFamily::T3_H, std::max(r, 1)}};
    } else if (family == "F") {
        jobs = {{TheoremFamily::A_F, r}};
    } else if (family == "G") {
        jobs = {{TheoremFamily::T1_G, r}};
    } else if (family == "H") {
        jobs = {{TheoremFamily::T3_H, r}};
    } else {
        throw CLI::ValidationError("--family", "expected F, G, H or all");
    }
    for (auto [fam, rr] : jobs) reports.push_back(fuzz_theorem(fam, rr, n, pairs, seed, opt));

    int counterexamples = 0;
    for (const FuzzReport& rep : reports) counterexamples += rep.counterexamples;

    if (format == "json") {
        emit(fuzz_report_json(reports, seed, opt), output);
    } else if (format == "csv") {
        emit(fuzz_report_csv(reports), output);
    } else {
        std::ostringstream out;
        for (const FuzzReport& rep : reports) {
            out << "theorem " << theorem_family_name(rep.family) << " r=" << rep.r
                << " n=" << rep.n << ": " << rep.pairs << " pairs, "
                << rep.hypothesis_satisfied << " hypothesis-satisfying, "
                << rep.counterexamples << " counterexamples, margins ["
                << float17(rep.min_margin) << ", " << float17(rep.max_margin)
                << "], K_max=" << rep.k_max_used << "\n";
            if (!rep.first_failure.empty()) out << "  first failure: " << rep.first_failure << "\n";
        }
        emit(out.str(), output);
    }
    return counterexamples == 0 ? 0 : 1;
}

int run_explore(const std::string& family, int kmax, int rmax, const std::string& format,
                const std::string& output) {
    Family fam = Family::H;
    if (family == "G") fam = Family::G;
    else if (family != "H") throw CLI::ValidationError("--family", "expected G or H");
    const auto rows = explore_schur(fam, kmax, rmax);

    if (format == "json") {
        emit(explore_report_json(rows), output);
    } else if (format == "csv") {
        emit(explore_report_csv(rows), output);
    } else {
        std::ostringstream out;
        out << "Schur expansion signs (evidence, not proof)\n";
        bool any_negative = false;
        for (const SchurExploreRow& row : rows) {
            if (row.coeff.sign() < 0) any_negative = true;
            out << family_name(row.family) << " k=" << row.k << " r=" << row.r << "  s"
                << row.lambda.str() << "  " << row.coeff.str() << "\n";
        }
        out << (any_negative ? "negative coefficients found\n"
                             : "no negative coefficient found\n");
        emit(out.str(), output);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computation and verification of the symmetric-polynomial families "
                 "F/G/H, their matrix-entry expressions, and the p-norm theorem checkers"};
    app.require_subcommand(1);

    std::string format = "human", output;
    app.add_option("--format", format, "Output format: human, json, csv")
        ->check(CLI::IsMember({"human", "json", "csv"}));
    app.add_option("--output", output, "Write the report to a file instead of stdout");

    // compute
    auto* compute = app.add_subcommand("compute", "Compute one polynomial or matrix value");
    std::string family = "G", basis = "x", route, matrix_path;
    int k = 1, r = 1, n = 3;
    compute->add_option("--family", family, "e, p, F, G or H")->required();
    compute->add_option("--k", k, "Family index k (for family p: the power m)");
    compute->add_option("--r", r, "Family parameter r");
    compute->add_option("--n", n, "Number of variables");
    compute->add_option("--basis", basis, "x or p")->check(CLI::IsMember({"x", "p"}));
    compute->add_option("--route", route, "gf, ci or bf");
    compute->add_option("--matrix", matrix_path, "Matrix file; prints the exact value at its eigenvalues");

    // verify
    auto* verify = app.add_subcommand("verify", "Run the cross-route verification suites");
    VerifyConfig cfg;
    std::vector<std::string> suites;
    verify->add_option("--suite", suites,
                       "Subset of: routes, matrix, mellin, positivity, homomorphism, "
                       "schur-ostrowski (default: all)");
    verify->add_option("--seed", cfg.seed, "PRNG seed for the randomized checks");
    verify->add_option("--g-kmax", cfg.g_kmax, "G cap on k");
    verify->add_option("--g-rmax", cfg.g_rmax, "G cap on r");
    verify->add_option("--g-nmax", cfg.g_nmax, "G cap on n");
    verify->add_option("--h-kmax", cfg.h_kmax, "H cap on k");
    verify->add_option("--h-rmax", cfg.h_rmax, "H cap on r");
    verify->add_option("--h-nmax", cfg.h_nmax, "H cap on n");
    verify->add_option("--matrix-trials", cfg.matrix_trials, "Seeded random matrices");

    // fuzz
    auto* fuzz = app.add_subcommand("fuzz", "Majorization fuzzing of Theorems A, 1 and 3");
    std::string fuzz_family = "all";
    int fuzz_r = 2, fuzz_n = 4, pairs = 10000;
    std::uint64_t fuzz_seed = 42;
    TheoremOptions opt;
    fuzz->add_option("--family", fuzz_family, "F, G, H or all");
    fuzz->add_option("--r", fuzz_r, "Family parameter r");
    fuzz->add_option("--n", fuzz_n, "Vector length");
    fuzz->add_option("--pairs", pairs, "Number of generated pairs");
    fuzz->add_option("--seed", fuzz_seed, "PRNG seed");
    fuzz->add_option("--kmax", opt.k_max, "Hypothesis truncation K_max for G and H");
    fuzz->add_option("--grid-step", opt.grid_step, "p-grid resolution");
    fuzz->add_option("--tol", opt.rel_tol, "Relative tolerance on the norm conclusion");

    // explore-schur
    auto* explore = app.add_subcommand("explore-schur", "Schur-basis sign explorer");
    std::string explore_family = "H";
    int explore_kmax = 4, explore_rmax = 3;
    explore->add_option("--family", explore_family, "G or H");
    explore->add_option("--kmax", explore_kmax, "Cap on k");
    explore->add_option("--rmax", explore_rmax, "Cap on r");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (compute->parsed())
            return run_compute(family, k, r, n, basis, route, matrix_path, format, output);
        if (verify->parsed()) return run_verify(cfg, suites, format, output);
        if (fuzz->parsed())
            return run_fuzz(fuzz_family, fuzz_r, fuzz_n, pairs, fuzz_seed, opt, format, output);
        if (explore->parsed())
            return run_explore(explore_family, explore_kmax, explore_rmax, format, output);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "error: cap exceeded: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
