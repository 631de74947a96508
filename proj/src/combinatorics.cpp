#include "symnorm/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace symnorm {

int Partition::total() const {
    return static_cast<int>(std::accumulate(parts.begin(), parts.end(), 0L));
}

std::vector<int> Partition::multiplicities(int k) const {
    std::vector<int> n(static_cast<std::size_t>(k), 0);
    for (int p : parts) {
        if (p < 1 || p > k) throw std::out_of_range("Partition: part out of range");
        n[static_cast<std::size_t>(p - 1)] += 1;
    }
    return n;
}

std::string Partition::str() const {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out << ",";
        out << parts[i];
    }
    out << ")";
    return out.str();
}

std::vector<Partition> partitions_of(int k) {
    if (k < 0) throw std::invalid_argument("partitions_of: negative k");
    std::vector<Partition> out;
    std::vector<int> cur;
    // Recursive descent, largest part first: yields reverse-lex order.
    std::function<void(int, int)> rec = [&](int rem, int max_part) {
        if (rem == 0) {
            out.push_back(Partition{cur});
            return;
        }
        for (int p = std::min(rem, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(k, k);
    return out;
}

long long partition_count(int k) {
    // Euler recurrence with pentagonal numbers.
    std::vector<long long> p(static_cast<std::size_t>(k) + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= k; ++n) {
        long long s = 0;
        for (int j = 1;; ++j) {
            const int g1 = j * (3 * j - 1) / 2;
            const int g2 = j * (3 * j + 1) / 2;
            if (g1 > n && g2 > n) break;
            const long long sign = (j % 2 == 1) ? 1 : -1;
            if (g1 <= n) s += sign * p[static_cast<std::size_t>(n - g1)];
            if (g2 <= n) s += sign * p[static_cast<std::size_t>(n - g2)];
        }
        p[static_cast<std::size_t>(n)] = s;
    }
    return p[static_cast<std::size_t>(k)];
}

unsigned long long factorial_u64(int k) {
    if (k < 0 || k > 20) throw std::out_of_range("factorial_u64: k outside [0,20]");
    unsigned long long f = 1;
    for (int i = 2; i <= k; ++i) f *= static_cast<unsigned long long>(i);
    return f;
}

static CycleType make_cycle_type(const Partition& lambda, int k) {
    CycleType ct;
    ct.partition = lambda;
    ct.mult = lambda.multiplicities(k);
    unsigned long long denom = 1;
    int sign = 1;
    for (int m = 1; m <= k; ++m) {
        const int nm = ct.mult[static_cast<std::size_t>(m - 1)];
        for (int c = 0; c < nm; ++c) denom *= static_cast<unsigned long long>(m);
        denom *= factorial_u64(nm);
        if (m % 2 == 0 && nm % 2 == 1) sign = -sign;
    }
    ct.class_size = factorial_u64(k) / denom;
    ct.sign = sign;
    return ct;
}

std::vector<CycleType> cycle_types_of(int k) {
    std::vector<CycleType> out;
    for (const Partition& lambda : partitions_of(k)) out.push_back(make_cycle_type(lambda, k));
    return out;
}

std::vector<CycleType> cycle_types_filtered(int k, const std::function<bool(int)>& admissible) {
    std::vector<CycleType> out;
    for (const Partition& lambda : partitions_of(k)) {
        if (std::all_of(lambda.parts.begin(), lambda.parts.end(), admissible))
            out.push_back(make_cycle_type(lambda, k));
    }
    return out;
}

std::vector<MultisetIndex> multiset_indices(int n, int k) {
    if (n < 1 || k < 0) throw std::invalid_argument("multiset_indices: need n >= 1, k >= 0");
    std::vector<MultisetIndex> out;
    std::vector<int> N(static_cast<std::size_t>(n), 0);
    N[0] = k;
    const unsigned long long kfact = factorial_u64(k);
    auto emit = [&]() {
        MultisetIndex mi;
        mi.counts = N;
        unsigned long long denom = 1;
        for (int i = 0; i < n; ++i) {
            denom *= factorial_u64(N[static_cast<std::size_t>(i)]);
            for (int c = 0; c < N[static_cast<std::size_t>(i)]; ++c)
                mi.index_map.push_back(i + 1);
        }
        mi.multiplicity = kfact / denom;
        out.push_back(std::move(mi));
    };
    emit();
    // Colex successor: bump the slot after the first nonzero count.
    while (true) {
        int i = 0;
        while (i < n && N[static_cast<std::size_t>(i)] == 0) ++i;
        if (i >= n - 1) break;
        const int t = N[static_cast<std::size_t>(i)] - 1;
        N[static_cast<std::size_t>(i)] = 0;
        N[static_cast<std::size_t>(i + 1)] += 1;
        N[0] = t;
        emit();
    }
    return out;
}

Partition cycle_type_of(const Perm& p) {
    const int k = static_cast<int>(p.size());
    std::vector<bool> seen(p.size(), false);
    std::vector<int> lens;
    for (int s = 0; s < k; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        int len = 0, j = s;
        while (!seen[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = true;
            j = p[static_cast<std::size_t>(j)];
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end(), std::greater<int>());
    return Partition{std::move(lens)};
}

int permutation_sign(const Perm& p) {
    int sign = 1;
    for (int len : cycle_type_of(p).parts)
        if (len % 2 == 0) sign = -sign;
    return sign;
}

int cycle_count(const Perm& p) {
    return cycle_type_of(p).num_parts();
}

Perm sigma_r(const Perm& p, int r) {
    const int k = static_cast<int>(p.size());
    Perm out(p.size());
    std::iota(out.begin(), out.end(), 0);
    std::vector<bool> seen(p.size(), false);
    for (int s = 0; s < k; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<int> cyc;
        int j = s;
        while (!seen[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = true;
            cyc.push_back(j);
            j = p[static_cast<std::size_t>(j)];
        }
        if (static_cast<int>(cyc.size()) > r) {
            for (int v : cyc) out[static_cast<std::size_t>(v)] = p[static_cast<std::size_t>(v)];
        }
    }
    return out;
}

void for_each_permutation(int k, const std::function<void(const Perm&)>& fn, int cap) {
    if (k > cap)
        throw std::length_error("for_each_permutation: k exceeds enumeration cap");
    Perm p(static_cast<std::size_t>(k));
    std::iota(p.begin(), p.end(), 0);
    do {
        fn(p);
    } while (std::next_permutation(p.begin(), p.end()));
}

void for_each_permutation_of_class(const Partition& type, int k,
                                   const std::function<void(const Perm&)>& fn, int cap) {
    Partition want = type;
    std::sort(want.parts.begin(), want.parts.end(), std::greater<int>());
    if (want.total() != k)
        throw std::invalid_argument("for_each_permutation_of_class: type is not a partition of k");
    for_each_permutation(k, [&](const Perm& p) {
        if (cycle_type_of(p) == want) fn(p);
    }, cap);
}

} // namespace symnorm
