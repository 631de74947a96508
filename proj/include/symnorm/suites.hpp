#pragma once

#include "symnorm/matrixforms.hpp"
#include "symnorm/norms.hpp"
#include "symnorm/sympoly.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace symnorm {

struct CheckResult {
    std::string suite;
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyConfig {
    std::uint64_t seed = 42;
    int g_kmax = 6, g_rmax = 4, g_nmax = 5;
    int h_kmax = 3, h_rmax = 3, h_nmax = 4;
    int h_bruteforce_cap = 8; // largest kr fed to the T(k,r) enumeration
    int zk_kmax = 7;
    int matrix_trials = 20;
    int matrix_nmax = 3;
    int gamma_rmax = 3, gamma_nmax = 3, gamma_order = 6;
    int schur_ostrowski_samples = 100;
    double mellin_rel_tol = 1e-8;
};

std::vector<CheckResult> run_route_suite(const VerifyConfig& cfg);
std::vector<CheckResult> run_matrix_suite(const VerifyConfig& cfg);
std::vector<CheckResult> run_mellin_suite(const VerifyConfig& cfg);
std::vector<CheckResult> run_positivity_suite(const VerifyConfig& cfg);
std::vector<CheckResult> run_homomorphism_suite(const VerifyConfig& cfg);
std::vector<CheckResult> run_schur_ostrowski_suite(const VerifyConfig& cfg);

// All of the above, in a fixed order.
std::vector<CheckResult> run_verify_suites(const VerifyConfig& cfg,
                                           const std::vector<std::string>& selection = {});

// Random matrix with entries num/den, num in [-9,9], den in [1,4].
RatMatrix random_rat_matrix(int n, std::mt19937_64& rng);
// Exact determinant by fraction-free Gaussian elimination (independent of
// the modified-determinant code paths).
Rat gauss_det(RatMatrix m);
// Exact inverse; throws if singular.
RatMatrix gauss_inverse(const RatMatrix& m);

struct SchurExploreRow {
    Family family = Family::H;
    int k = 0, r = 0;
    Partition lambda;
    Rat coeff;
};

std::vector<SchurExploreRow> explore_schur(Family fam, int k_max, int r_max,
                                           int degree_cap = kSchurDegreeCap);

// --- deterministic report rendering (schema "1") ---

std::string float17(double v);

std::string verify_report_json(const VerifyConfig& cfg, const std::vector<CheckResult>& results);
std::string verify_report_csv(const std::vector<CheckResult>& results);
std::string fuzz_report_json(const std::vector<FuzzReport>& reports, std::uint64_t seed,
                             const TheoremOptions& opt);
std::string fuzz_report_csv(const std::vector<FuzzReport>& reports);
std::string explore_report_json(const std::vector<SchurExploreRow>& rows);
std::string explore_report_csv(const std::vector<SchurExploreRow>& rows);

} // namespace symnorm
