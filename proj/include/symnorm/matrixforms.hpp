#pragma once

#include "symnorm/combinatorics.hpp"
#include "symnorm/rat.hpp"
#include "symnorm/sympoly.hpp"

#include <iosfwd>
#include <vector>

namespace symnorm {

// Dense square matrix over Rat.
class RatMatrix {
public:
    RatMatrix() : n_(0) {}
    explicit RatMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

    static RatMatrix identity(int n);

    int dim() const { return n_; }
    Rat& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const Rat& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    Rat trace() const;
    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.n_ == b.n_ && a.a_ == b.a_;
    }

    // Text format: first line n, then n rows of n rationals ("p/q" or
    // integer), whitespace-separated.
    static RatMatrix read(std::istream& in);
    std::string str() const;

private:
    int n_;
    std::vector<Rat> a_;
};

// Exact Trace(A^m).
Rat trace_power(const RatMatrix& a, int m);

// B with B(i,j) = A(m(i), m(j)) for an arbitrary index map m (1-based
// values); a principal submatrix when m is strictly increasing.
RatMatrix generalized_submatrix(const RatMatrix& a, const std::vector<int>& index_map);

// Modified determinant over S(k,r): sum of sgn(sigma_r) prod_j B(sigma_r(j), j).
// Collapses to det(B) at r = 1. Full permutation enumeration; the product is
// not a class function of sigma for fixed B.
Rat modified_det_G(const RatMatrix& b, int r, int cap = kPermutationCap);

// Modified determinant over T(k,r) in S_{kr} with weight sgn(sigma) r^{L(sigma)}
// and overall sign (-1)^{k(r-1)}; b must be kr x kr. Collapses to det at r = 1.
Rat modified_det_H(const RatMatrix& b, int k, int r, int cap = kPermutationCap);

// G_{k,r} or H_{k,r} of the eigenvalues of A, via Z_k with p_m -> Trace(A^m).
Rat family_from_traces(Family fam, int k, int r, const RatMatrix& a);

// Same value via the multiset-index sum of modified determinants of
// generalized submatrices.
Rat family_from_entries(Family fam, int k, int r, const RatMatrix& a, int cap = kPermutationCap);

// Unreduced form: averages the modified determinant over every index map in
// Gamma_{k,n} (Gamma_{kr,n} for H). Test route for the class-function
// reduction.
Rat family_from_entries_full(Family fam, int k, int r, const RatMatrix& a,
                             int cap = kPermutationCap);

} // namespace symnorm
