#pragma once

#include "symnorm/rat.hpp"
#include "symnorm/sympoly.hpp"

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace symnorm {

// Normalized p-mean ((1/n) sum x_i^p)^(1/p) for p > 0; geometric mean at
// p = 0 (zero if any entry is zero). Entries must be nonnegative.
double pnorm(std::span<const double> x, double p);

// psi_r(t) = (-1)^r (log(1+t) - Q_r(t)), Q_r the degree-r Taylor polynomial
// of log(1+t); switches to the tail series below t = 0.5 to dodge
// cancellation. phi_r(t) = t^r - log(1 + t^r).
double psi_kernel(int r, double t);
double phi_kernel(int r, double t);

enum class Kernel { Psi, Phi };

// Open convergence window of C_p: (r, r+1) for psi_r, (r, 2r) for phi_r.
bool in_mellin_window(Kernel kern, int r, double p);

struct Quadrature {
    double value = 0.0;
    double abs_error = 0.0;
    int panels = 0;
    bool converged = false;
};

// C_p(kernel) = int_0^inf kernel(t) t^(-p) dt/t by adaptive Gauss-Kronrod
// panels, tail folded by u = 1/t. Throws outside the window.
Quadrature mellin_constant(Kernel kern, int r, double p, double rel_tol = 1e-10);

// Closed forms derived by integrating by parts against psi_r'(t) = t^r/(1+t)
// and the beta integral: pi/(p sin(pi(r+1-p))) for psi, -pi/(p sin(pi p/r))
// for phi.
double mellin_constant_closed_form(Kernel kern, int r, double p);

// Quadrature of (1/C_p) int_0^inf kernel(a t) t^(-p) dt/t compared against
// a^p; returns the relative error.
double power_representation_rel_error(Kernel kern, int r, double a, double p,
                                      double rel_tol = 1e-10);

// --- exact evaluation of the polynomial families at rational points ---

Rat rat_power_sum(std::span<const Rat> x, int m);
Rat F_value(int k, int r, std::span<const Rat> x);
Rat G_value(int k, int r, std::span<const Rat> x);
Rat H_value(int k, int r, std::span<const Rat> x);

// --- theorem checkers ---

enum class TheoremFamily { A_F, T1_G, T3_H };
const char* theorem_family_name(TheoremFamily f);

struct TheoremOptions {
    double grid_step = 0.05;
    double rel_tol = 1e-9;
    int k_max = 8; // truncation of the "for all k" hypotheses of G and H
};

struct PMargin {
    double p = 0.0;
    double norm_x = 0.0;
    double norm_y = 0.0;
    double margin = 0.0; // signed so that margin < -tol*scale is a violation
};

struct TheoremVerdict {
    bool hypothesis_satisfied = false;
    std::vector<int> failing_k;
    bool sum_ok = false;
    Rat sum_residual;
    std::vector<PMargin> margins;
    bool counterexample = false;
    int k_max_used = 0;
};

// Evaluates the polynomial hypotheses exactly, then samples the norm
// conclusion over the theorem's p-interval. The counterexample flag fires
// only when the hypotheses (and the sum constraint, where required) hold yet
// some margin violates the conclusion beyond tolerance.
TheoremVerdict check_theorem(TheoremFamily fam, int r, std::span<const Rat> x,
                             std::span<const Rat> y, const TheoremOptions& opt = {});

// Float-input convenience: entries are rationalized exactly first.
TheoremVerdict check_theorem(TheoremFamily fam, int r, std::span<const double> x,
                             std::span<const double> y, const TheoremOptions& opt = {});

// --- majorization fuzzing ---

// y = Dx for a random product of T-transforms: x majorizes y and the sums
// agree exactly.
std::pair<std::vector<Rat>, std::vector<Rat>> majorization_pair(int n, std::mt19937_64& rng,
                                                                int transforms = 4);

struct FuzzReport {
    TheoremFamily family = TheoremFamily::T1_G;
    int r = 0;
    int n = 0;
    int pairs = 0;
    int hypothesis_satisfied = 0;
    int counterexamples = 0;
    double min_margin = 0.0;
    double max_margin = 0.0;
    int k_max_used = 0;
    std::string first_failure; // replay dump of the first counterexample pair
};

FuzzReport fuzz_theorem(TheoremFamily fam, int r, int n, int pairs, std::uint64_t seed,
                        const TheoremOptions& opt = {});

// --- Schur-Ostrowski sampling ---

struct SchurOstrowskiReport {
    Family family = Family::G;
    int k = 0, r = 0, n = 0;
    int samples = 0;
    int violations = 0;
    int strict = 0; // samples where the criterion held strictly
    std::string first_violation;
};

// Exact sign of (x_i - x_j)(df/dx_i - df/dx_j) at random nonnegative
// rational points; must be >= 0 for (-1)^r G_{k,r} and <= 0 for H_{k,r}.
SchurOstrowskiReport schur_ostrowski_check(Family fam, int k, int r, int n, int samples,
                                           std::uint64_t seed);

} // namespace symnorm
