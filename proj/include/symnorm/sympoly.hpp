#pragma once

#include "symnorm/combinatorics.hpp"
#include "symnorm/mpoly.hpp"
#include "symnorm/tseries.hpp"

#include <functional>
#include <vector>

namespace symnorm {

enum class Family { F, G, H };
enum class Route { GeneratingFunction, CycleIndex, BruteForce };

const char* family_name(Family f);
const char* route_name(Route r);

// e_k(x_1..x_n) by direct k-subset enumeration (zero when k > n) and
// p_m = sum x_i^m. Both in the x-variable ring.
MPoly elementary(int k, int n);
MPoly power_sum(int m, int n);

// The p-basis ring: variable m stands for the power sum p_m.
MPoly p_var(int m, int npvars);

// Modified power-sum sequences alpha_1..alpha_k over any coefficient ring,
// given a provider for p_m. Family G (r >= 0): p_1^m for odd m <= r, 0 for
// even m <= r, p_m above r. Family H (r >= 1): p_1^r, then p_{mr}.
template <class V>
std::vector<V> alpha_values(Family fam, int r, int k, const std::function<V(int)>& p_of) {
    if (fam == Family::G && r < 0) throw std::invalid_argument("alpha_values: G needs r >= 0");
    if (fam == Family::H && r < 1) throw std::invalid_argument("alpha_values: H needs r >= 1");
    if (fam == Family::F) throw std::invalid_argument("alpha_values: no alpha sequence for F");
    std::vector<V> alpha;
    alpha.reserve(static_cast<std::size_t>(k));
    for (int m = 1; m <= k; ++m) {
        if (fam == Family::G) {
            if (m <= r)
                alpha.push_back(m % 2 == 1 ? p_of(1).pow(static_cast<unsigned>(m))
                                           : zero_like(p_of(1)));
            else
                alpha.push_back(p_of(m));
        } else {
            alpha.push_back(m == 1 ? p_of(1).pow(static_cast<unsigned>(r)) : p_of(m * r));
        }
    }
    return alpha;
}

// AlphaSeq over the p-basis polynomial ring.
struct AlphaSeq {
    Family family;
    int r;
    MPoly alpha(int m, int npvars) const;
    std::vector<MPoly> values(int k, int npvars) const;
};

// --- the three Z_k routes of the exponential formula ---

inline Rat scale_of(const Rat& v, const Rat& s) { return v * s; }
inline MPoly scale_of(const MPoly& v, const Rat& s) { return v.scaled(s); }

// Partition sum: sum over partitions of k of sgn * prod (a_m/m)^{n_m}/n_m!.
template <class V>
V zk_partition(const std::vector<V>& alpha, int k) {
    if (k < 1 || static_cast<int>(alpha.size()) < k)
        throw std::invalid_argument("zk_partition: need alpha_1..alpha_k, k >= 1");
    V acc = zero_like(alpha[0]);
    for (const CycleType& ct : cycle_types_of(k)) {
        V term = one_like(alpha[0]);
        unsigned long long denom = 1;
        for (int m = 1; m <= k; ++m) {
            const int nm = ct.mult[static_cast<std::size_t>(m - 1)];
            if (nm == 0) continue;
            term = term * alpha[static_cast<std::size_t>(m - 1)].pow(static_cast<unsigned>(nm));
            for (int c = 0; c < nm; ++c) denom *= static_cast<unsigned long long>(m);
            denom *= factorial_u64(nm);
        }
        acc += scale_of(term, Rat(ct.sign) / Rat::from_u64(denom));
    }
    return acc;
}

// Brute-force oracle: (1/k!) sum over S_k of sgn(sigma) alpha_sigma.
template <class V>
V zk_permutation_sum(const std::vector<V>& alpha, int k, int cap = kPermutationCap) {
    if (k < 1 || static_cast<int>(alpha.size()) < k)
        throw std::invalid_argument("zk_permutation_sum: need alpha_1..alpha_k, k >= 1");
    V acc = zero_like(alpha[0]);
    for_each_permutation(k, [&](const Perm& p) {
        V term = one_like(alpha[0]);
        for (int len : cycle_type_of(p).parts)
            term = term * alpha[static_cast<std::size_t>(len - 1)];
        acc += scale_of(term, Rat(permutation_sign(p)));
    }, cap);
    return scale_of(acc, Rat(1) / Rat::factorial(static_cast<unsigned>(k)));
}

// Determinant form, computed as the equivalent Newton-style recursion
// k Z_k = sum_{j=1..k} (-1)^{j-1} alpha_j Z_{k-j}.
template <class V>
V zk_determinant(const std::vector<V>& alpha, int k) {
    if (k < 1 || static_cast<int>(alpha.size()) < k)
        throw std::invalid_argument("zk_determinant: need alpha_1..alpha_k, k >= 1");
    std::vector<V> z;
    z.push_back(one_like(alpha[0]));
    for (int m = 1; m <= k; ++m) {
        V acc = zero_like(alpha[0]);
        for (int j = 1; j <= m; ++j) {
            V t = alpha[static_cast<std::size_t>(j - 1)] * z[static_cast<std::size_t>(m - j)];
            acc += scale_of(t, Rat(j % 2 == 1 ? 1 : -1));
        }
        z.push_back(scale_of(acc, Rat(1, m)));
    }
    return z[static_cast<std::size_t>(k)];
}

// --- the polynomial families ---

// Coefficient of t^k in prod_i P_r(x_i t), P_r the degree-r Taylor
// polynomial of e^s.
MPoly compute_F(int k, int r, int n);

// Generating functions as truncated series over the x-variable ring.
PolySeries g_series(int r, int n, int order);
PolySeries h_series(int r, int n, int order);

// p-basis results (CycleIndex or BruteForce routes). G uses p_1..p_k,
// H uses p_1..p_{kr}.
MPoly compute_G_pbasis(int k, int r, Route route);
MPoly compute_H_pbasis(int k, int r, Route route);

// x-basis results by any route; all routes agree exactly.
MPoly compute_G(int k, int r, int n, Route route);
MPoly compute_H(int k, int r, int n, Route route);

// Substitute p_m -> sum_i x_i^m.
MPoly expand_pbasis(const MPoly& f_pbasis, int n);

std::vector<MPoly> gradient(const MPoly& f);

// Explicit positive-coefficient witnesses from the Schur-convexity proofs:
// (-1)^r (dg_r/dx_i - dg_r/dx_j) = (x_i - x_j) gamma and
// (dh_r/dx_i - dh_r/dx_j) = -(x_i - x_j) delta.
PolySeries gamma_series(int r, int n, int i, int j, int order);
PolySeries delta_series(int r, int n, int i, int j, int order);

// --- Schur-basis explorer ---

inline constexpr int kSchurDegreeCap = 12;

// Irreducible S_k character chi^lambda(mu) by the Murnaghan-Nakayama rule.
long long character_value(const Partition& lambda, const Partition& mu);

struct SchurTerm {
    Partition lambda;
    Rat coeff;
};

// Expands a homogeneous p-basis symmetric function in the Schur basis
// (coefficient of s_lambda = sum_mu c_mu chi^lambda(mu)). Reports every
// lambda, including zero coefficients.
std::vector<SchurTerm> schur_expand(const MPoly& f_pbasis, int degree_cap = kSchurDegreeCap);

} // namespace symnorm
