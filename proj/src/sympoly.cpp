#include "symnorm/sympoly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace symnorm {

const char* family_name(Family f) {
    switch (f) {
        case Family::F: return "F";
        case Family::G: return "G";
        case Family::H: return "H";
    }
    return "?";
}

const char* route_name(Route r) {
    switch (r) {
        case Route::GeneratingFunction: return "generating-function";
        case Route::CycleIndex: return "cycle-index";
        case Route::BruteForce: return "brute-force";
    }
    return "?";
}

MPoly elementary(int k, int n) {
    if (k < 0 || n < 1) throw std::invalid_argument("elementary: need k >= 0, n >= 1");
    MPoly r = MPoly::zero(n, "x");
    if (k > n) return r;
    if (k == 0) return MPoly::constant(n, Rat(1), "x");
    std::vector<int> idx(static_cast<std::size_t>(k));
    // k-subsets of {0..n-1} in lexicographic order
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        Expvec e(static_cast<std::size_t>(n), 0);
        for (int i : idx) e[static_cast<std::size_t>(i)] = 1;
        r.add_term(e, Rat(1));
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        idx[static_cast<std::size_t>(i)] += 1;
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return r;
}

MPoly power_sum(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("power_sum: need m >= 1, n >= 1");
    MPoly r = MPoly::zero(n, "x");
    for (int i = 0; i < n; ++i) {
        Expvec e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = m;
        r.add_term(e, Rat(1));
    }
    return r;
}

MPoly p_var(int m, int npvars) {
    return MPoly::variable(npvars, m, "p");
}

MPoly AlphaSeq::alpha(int m, int npvars) const {
    std::function<MPoly(int)> p_of = [npvars](int j) { return p_var(j, npvars); };
    return alpha_values<MPoly>(family, r, m, p_of).back();
}

std::vector<MPoly> AlphaSeq::values(int k, int npvars) const {
    std::function<MPoly(int)> p_of = [npvars](int j) { return p_var(j, npvars); };
    return alpha_values<MPoly>(family, r, k, p_of);
}

MPoly compute_F(int k, int r, int n) {
    if (r < 1 || k < 1 || n < 1) throw std::invalid_argument("compute_F: need k, r, n >= 1");
    const MPoly zero = MPoly::zero(n, "x");
    PolySeries prod = PolySeries::constant(k, one_like(zero));
    for (int i = 1; i <= n; ++i) {
        PolySeries factor(k, zero);
        Rat fact(1);
        factor.set_coeff(0, one_like(zero));
        for (int j = 1; j <= std::min(r, k); ++j) {
            fact *= Rat(j);
            Expvec e(static_cast<std::size_t>(n), 0);
            e[static_cast<std::size_t>(i - 1)] = j;
            factor.set_coeff(j, MPoly::monomial(n, e, Rat(1) / fact, "x"));
        }
        prod = prod * factor;
    }
    return prod.coeff(k);
}

// Product over i of (1 + x_i^w t) at the given truncation order.
static PolySeries linear_product(int n, int w, int order, const std::vector<int>& skip = {}) {
    const MPoly zero = MPoly::zero(n, "x");
    PolySeries prod = PolySeries::constant(order, one_like(zero));
    for (int i = 1; i <= n; ++i) {
        if (std::find(skip.begin(), skip.end(), i) != skip.end()) continue;
        PolySeries factor(order, zero);
        factor.set_coeff(0, one_like(zero));
        if (order >= 1) {
            Expvec e(static_cast<std::size_t>(n), 0);
            e[static_cast<std::size_t>(i - 1)] = w;
            factor.set_coeff(1, MPoly::monomial(n, e, Rat(1), "x"));
        }
        prod = prod * factor;
    }
    return prod;
}

// Exponent of Eq-style G generating function: -sum_i Q_r(x_i t) + Q_r^-(p_1 t).
// Per power of t this is p_m t^m / m for even m <= r and (p_1^m - p_m) t^m / m
// for odd m <= r; nothing above r.
static PolySeries g_exponent(int r, int n, int order) {
    const MPoly zero = MPoly::zero(n, "x");
    PolySeries e(order, zero);
    const MPoly p1 = power_sum(1, n);
    for (int m = 1; m <= std::min(r, order); ++m) {
        MPoly c = power_sum(m, n).scaled(Rat(m % 2 == 0 ? 1 : -1, m));
        if (m % 2 == 1) c += p1.pow(static_cast<unsigned>(m)).scaled(Rat(1, m));
        e.set_coeff(m, c);
    }
    return e;
}

PolySeries g_series(int r, int n, int order) {
    if (r < 0 || n < 1 || order < 0) throw std::invalid_argument("g_series: bad parameters");
    return linear_product(n, 1, order) * g_exponent(r, n, order).exp_series();
}

PolySeries h_series(int r, int n, int order) {
    if (r < 1 || n < 1 || order < 0) throw std::invalid_argument("h_series: bad parameters");
    const MPoly zero = MPoly::zero(n, "x");
    PolySeries e(order, zero);
    if (order >= 1) {
        const MPoly p1 = power_sum(1, n);
        e.set_coeff(1, p1.pow(static_cast<unsigned>(r)) - power_sum(r, n));
    }
    return linear_product(n, r, order) * e.exp_series();
}

MPoly compute_G_pbasis(int k, int r, Route route) {
    if (k < 1 || r < 0) throw std::invalid_argument("compute_G_pbasis: need k >= 1, r >= 0");
    const int npvars = k;
    if (route == Route::CycleIndex) {
        AlphaSeq seq{Family::G, r};
        return zk_determinant(seq.values(k, npvars), k);
    }
    if (route != Route::BruteForce)
        throw std::invalid_argument("compute_G_pbasis: p-basis routes are cycle-index or brute-force");
    // Sum over S(k,r) organized by cycle type: sgn(sigma_r) p_{sigma_r}.
    MPoly acc = MPoly::zero(npvars, "p");
    for (const CycleType& ct : cycle_types_filtered(k, skr_admissible(r))) {
        Expvec e(static_cast<std::size_t>(npvars), 0);
        for (int m = 1; m <= k; ++m) {
            const int nm = ct.mult[static_cast<std::size_t>(m - 1)];
            if (nm == 0) continue;
            if (m <= r)
                e[0] += m * nm; // short cycles collapse to fixed points: p_1 factors
            else
                e[static_cast<std::size_t>(m - 1)] += nm;
        }
        acc.add_term(e, Rat(ct.sign) * Rat::from_u64(ct.class_size));
    }
    return acc.scaled(Rat(1) / Rat::factorial(static_cast<unsigned>(k)));
}

MPoly compute_H_pbasis(int k, int r, Route route) {
    if (k < 1 || r < 1) throw std::invalid_argument("compute_H_pbasis: need k >= 1, r >= 1");
    const int npvars = k * r;
    if (route == Route::CycleIndex) {
        AlphaSeq seq{Family::H, r};
        return zk_determinant(seq.values(k, npvars), k);
    }
    if (route != Route::BruteForce)
        throw std::invalid_argument("compute_H_pbasis: p-basis routes are cycle-index or brute-force");
    // Sum over T(k,r) inside S_{kr} organized by cycle type, weight
    // sgn(sigma) r^{L(sigma)}, overall sign (-1)^{k(r-1)}; r-cycles collapse
    // to r fixed points each.
    const int kr = k * r;
    MPoly acc = MPoly::zero(npvars, "p");
    for (const CycleType& ct : cycle_types_filtered(kr, tkr_admissible(r))) {
        Expvec e(static_cast<std::size_t>(npvars), 0);
        Rat weight(ct.sign);
        for (int m = 1; m <= kr; ++m) {
            const int nm = ct.mult[static_cast<std::size_t>(m - 1)];
            if (nm == 0) continue;
            weight *= Rat(r).pow(static_cast<unsigned>(nm));
            if (m == r)
                e[0] += r * nm;
            else
                e[static_cast<std::size_t>(m - 1)] += nm;
        }
        acc.add_term(e, weight * Rat::from_u64(ct.class_size));
    }
    const int sign = (static_cast<long>(k) * (r - 1)) % 2 == 0 ? 1 : -1;
    return acc.scaled(Rat(sign) / Rat::factorial(static_cast<unsigned>(kr)));
}

MPoly expand_pbasis(const MPoly& f_pbasis, int n) {
    std::vector<MPoly> images;
    images.reserve(static_cast<std::size_t>(f_pbasis.nvars()));
    for (int m = 1; m <= f_pbasis.nvars(); ++m) images.push_back(power_sum(m, n));
    return f_pbasis.substitute(images);
}

MPoly compute_G(int k, int r, int n, Route route) {
    if (route == Route::GeneratingFunction) return g_series(r, n, k).coeff(k);
    return expand_pbasis(compute_G_pbasis(k, r, route), n);
}

MPoly compute_H(int k, int r, int n, Route route) {
    if (route == Route::GeneratingFunction) return h_series(r, n, k).coeff(k);
    return expand_pbasis(compute_H_pbasis(k, r, route), n);
}

std::vector<MPoly> gradient(const MPoly& f) {
    std::vector<MPoly> g;
    g.reserve(static_cast<std::size_t>(f.nvars()));
    for (int i = 1; i <= f.nvars(); ++i) g.push_back(f.partial(i));
    return g;
}

// (x_i^m - x_j^m)/(x_i - x_j), exactly; zero for m = 0.
static MPoly power_difference_quotient(int n, int i, int j, int m) {
    if (m == 0) return MPoly::zero(n, "x");
    const MPoly xi = MPoly::variable(n, i, "x");
    const MPoly xj = MPoly::variable(n, j, "x");
    return (xi.pow(static_cast<unsigned>(m)) - xj.pow(static_cast<unsigned>(m)))
        .divide_exact(xi - xj);
}

PolySeries gamma_series(int r, int n, int i, int j, int order) {
    if (r < 1 || n < 2 || i == j || i < 1 || j < 1 || i > n || j > n)
        throw std::invalid_argument("gamma_series: need r >= 1, n >= 2, distinct indices");
    const MPoly zero = MPoly::zero(n, "x");
    const MPoly xixj = MPoly::variable(n, i, "x") * MPoly::variable(n, j, "x");
    PolySeries head(order, zero);
    if (r + 1 <= order) head.set_coeff(r + 1, power_difference_quotient(n, i, j, r));
    if (r + 2 <= order)
        head.set_coeff(r + 2, xixj * power_difference_quotient(n, i, j, r - 1));
    return head * linear_product(n, 1, order, {i, j}) * g_exponent(r, n, order).exp_series();
}

PolySeries delta_series(int r, int n, int i, int j, int order) {
    if (r < 1 || n < 2 || i == j || i < 1 || j < 1 || i > n || j > n)
        throw std::invalid_argument("delta_series: need r >= 1, n >= 2, distinct indices");
    const MPoly zero = MPoly::zero(n, "x");
    const MPoly xi = MPoly::variable(n, i, "x");
    const MPoly xj = MPoly::variable(n, j, "x");
    PolySeries head(order, zero);
    if (2 <= order)
        head.set_coeff(2, power_difference_quotient(n, i, j, 2 * r - 1).scaled(Rat(r)));
    if (3 <= order)
        head.set_coeff(3, (xi.pow(static_cast<unsigned>(r)) * xj.pow(static_cast<unsigned>(r)) *
                           power_difference_quotient(n, i, j, r - 1))
                              .scaled(Rat(r)));
    PolySeries expo(order, zero);
    if (order >= 1) {
        const MPoly p1 = power_sum(1, n);
        expo.set_coeff(1, p1.pow(static_cast<unsigned>(r)) - power_sum(r, n));
    }
    return head * linear_product(n, r, order, {i, j}) * expo.exp_series();
}

// --- Murnaghan-Nakayama characters ---

namespace {

// Beta-set representation: strictly decreasing first-column hook lengths.
std::vector<int> beta_set(const Partition& lambda) {
    const int len = lambda.num_parts();
    std::vector<int> b(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i)
        b[static_cast<std::size_t>(i)] = lambda.parts[static_cast<std::size_t>(i)] + (len - 1 - i);
    return b;
}

struct MNKey {
    std::vector<int> beta;
    std::size_t idx;
    bool operator<(const MNKey& o) const {
        if (idx != o.idx) return idx < o.idx;
        return beta < o.beta;
    }
};

long long mn_recurse(std::vector<int> beta, std::size_t idx, const std::vector<int>& mu,
                     std::map<MNKey, long long>& memo) {
    if (idx == mu.size()) return 1;
    MNKey key{beta, idx};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int s = mu[idx];
    long long total = 0;
    for (std::size_t pos = 0; pos < beta.size(); ++pos) {
        const int target = beta[pos] - s;
        if (target < 0) continue;
        bool occupied = false;
        int crossings = 0;
        for (std::size_t q = 0; q < beta.size(); ++q) {
            if (q == pos) continue;
            if (beta[q] == target) { occupied = true; break; }
            if (beta[q] > target && beta[q] < beta[pos]) ++crossings;
        }
        if (occupied) continue;
        std::vector<int> next = beta;
        next[pos] = target;
        std::sort(next.begin(), next.end(), std::greater<int>());
        const long long sub = mn_recurse(std::move(next), idx + 1, mu, memo);
        total += (crossings % 2 == 0 ? sub : -sub);
    }
    memo.emplace(std::move(key), total);
    return total;
}

} // namespace

long long character_value(const Partition& lambda, const Partition& mu) {
    if (lambda.total() != mu.total())
        throw std::invalid_argument("character_value: lambda and mu must partition the same k");
    std::map<MNKey, long long> memo;
    return mn_recurse(beta_set(lambda), 0, mu.parts, memo);
}

std::vector<SchurTerm> schur_expand(const MPoly& f_pbasis, int degree_cap) {
    if (f_pbasis.tag() != "p")
        throw std::invalid_argument("schur_expand: input must be in the p-basis");
    if (f_pbasis.is_zero()) return {};
    std::vector<int> weights(static_cast<std::size_t>(f_pbasis.nvars()));
    for (int m = 1; m <= f_pbasis.nvars(); ++m) weights[static_cast<std::size_t>(m - 1)] = m;
    const auto deg = f_pbasis.homogeneous_degree(weights);
    if (!deg)
        throw std::invalid_argument("schur_expand: input is not homogeneous in the p-grading");
    if (*deg > degree_cap)
        throw std::length_error("schur_expand: degree exceeds the explorer cap");
    const int k = static_cast<int>(*deg);

    // exponent vector -> partition mu with e[m-1] parts equal to m
    std::vector<std::pair<Partition, Rat>> pterms;
    for (const auto& [e, c] : f_pbasis.terms()) {
        Partition mu;
        for (int m = f_pbasis.nvars(); m >= 1; --m)
            for (int c2 = 0; c2 < e[static_cast<std::size_t>(m - 1)]; ++c2)
                mu.parts.push_back(m);
        pterms.emplace_back(std::move(mu), c);
    }

    std::vector<SchurTerm> out;
    for (const Partition& lambda : partitions_of(k)) {
        Rat coeff;
        for (const auto& [mu, c] : pterms)
            coeff += c * Rat(character_value(lambda, mu));
        out.push_back(SchurTerm{lambda, coeff});
    }
    return out;
}

} // namespace symnorm
