#pragma once

#include "symnorm/rat.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace symnorm {

// Multiset of cycle lengths / partition of k, parts nonincreasing.
struct Partition {
    std::vector<int> parts;

    int total() const;
    // n_m for m = 1..k (index m-1).
    std::vector<int> multiplicities(int k) const;
    int num_parts() const { return static_cast<int>(parts.size()); }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts < b.parts; }
    std::string str() const;
};

// Conjugacy class of S_k: cycle-length partition with its class size
// k!/prod(m^{n_m} n_m!) and sign prod((-1)^(m-1))^{n_m}.
struct CycleType {
    Partition partition;
    std::vector<int> mult; // n_m at index m-1, length k
    unsigned long long class_size = 0;
    int sign = 1;
};

// All partitions of k in reverse lexicographic order: (k), (k-1,1), ..., (1^k).
std::vector<Partition> partitions_of(int k);
long long partition_count(int k);

std::vector<CycleType> cycle_types_of(int k);
// Cycle types whose part sizes all satisfy the predicate.
std::vector<CycleType> cycle_types_filtered(int k, const std::function<bool(int)>& admissible);

// Part-size predicates for the restricted permutation classes: S(k,r) has no
// cycles of even length <= r; T(k,r) lives in S_{kr} with all lengths
// divisible by r.
inline auto skr_admissible(int r) {
    return [r](int m) { return !(m % 2 == 0 && m <= r); };
}
inline auto tkr_admissible(int r) {
    return [r](int m) { return m % r == 0; };
}

// Weak composition N of k into n parts plus the nondecreasing index map
// m^(N) it induces and the count of distinct rearrangements k!/prod(N_i!).
struct MultisetIndex {
    std::vector<int> counts;      // N, length n
    std::vector<int> index_map;   // m^(N), length k, values 1..n nondecreasing
    unsigned long long multiplicity = 1;
};

// All weak compositions of k into n parts, colex order:
// (k,0,...,0), ..., (0,...,0,k).
std::vector<MultisetIndex> multiset_indices(int n, int k);

// --- explicit permutations (small-k oracle support) ---

using Perm = std::vector<int>; // 0-based images: sigma(j) = perm[j]

// Guard against factorial blowups in the explicit-enumeration oracles.
inline constexpr int kPermutationCap = 8;

Partition cycle_type_of(const Perm& p);
int permutation_sign(const Perm& p);
int cycle_count(const Perm& p);
// sigma_r: cycles of length > r kept, shorter cycles become fixed points.
Perm sigma_r(const Perm& p, int r);

// Streams every element of S_k in lexicographic order. Throws if k exceeds
// the cap.
void for_each_permutation(int k, const std::function<void(const Perm&)>& fn,
                          int cap = kPermutationCap);
// Streams exactly the permutations of the given cycle type.
void for_each_permutation_of_class(const Partition& type, int k,
                                   const std::function<void(const Perm&)>& fn,
                                   int cap = kPermutationCap);

unsigned long long factorial_u64(int k);

} // namespace symnorm
