#pragma once

#include "symnorm/rat.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace symnorm {

using Expvec = std::vector<int>;

// Graded-lexicographic, biggest term first: higher total degree wins, ties
// broken by lexicographically larger exponent vector. Map iteration order is
// therefore the canonical display order.
struct GradedLexDesc {
    bool operator()(const Expvec& a, const Expvec& b) const;
};

// Sparse multivariate polynomial over Rat in a fixed number of named
// variables ("x1..xn" or "p1..pn"). Canonical form: no zero coefficients
// stored, terms ordered graded-lex descending. Immutable in spirit; all
// operations return new values.
class MPoly {
public:
    using TermMap = std::map<Expvec, Rat, GradedLexDesc>;

    MPoly() : nvars_(0), tag_("x") {}
    MPoly(int nvars, std::string tag) : nvars_(nvars), tag_(std::move(tag)) {}

    static MPoly zero(int nvars, std::string tag = "x") { return MPoly(nvars, std::move(tag)); }
    static MPoly constant(int nvars, const Rat& c, std::string tag = "x");
    // 1-based variable index.
    static MPoly variable(int nvars, int i, std::string tag = "x");
    static MPoly monomial(int nvars, Expvec e, const Rat& c, std::string tag = "x");

    int nvars() const { return nvars_; }
    const std::string& tag() const { return tag_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Rat coeff(const Expvec& e) const;
    Rat constant_term() const { return coeff(Expvec(nvars_, 0)); }

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    MPoly scaled(const Rat& c) const;
    MPoly pow(unsigned e) const;

    friend bool operator==(const MPoly& a, const MPoly& b);
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    // Exact formal partial derivative with respect to variable i (1-based).
    MPoly partial(int i) const;

    // Quotient q with q*g == *this; throws std::domain_error carrying a
    // remainder witness if g does not divide exactly.
    MPoly divide_exact(const MPoly& g) const;
    std::optional<MPoly> try_divide_exact(const MPoly& g, MPoly* remainder = nullptr) const;

    struct NonnegReport {
        bool nonneg = true;
        Expvec witness_exponents;
        Rat witness_coeff;
    };
    NonnegReport coefficientwise_nonneg() const;

    // Ring homomorphism sending variable i to images[i-1]; images fix the
    // target ring (all must share nvars/tag).
    MPoly substitute(std::span<const MPoly> images) const;
    Rat evaluate(std::span<const Rat> point) const;

    // Swaps variables i and j (1-based).
    MPoly swap_vars(int i, int j) const;
    bool is_symmetric() const;

    int total_degree() const; // -1 for the zero polynomial
    // Degree under weights w_i per variable; nullopt if not homogeneous.
    std::optional<long> homogeneous_degree(std::span<const int> weights) const;
    std::optional<long> homogeneous_degree() const;

    // Canonical rendering, e.g. "7/40*p1^5 - 1/4*p1*p4 + 1/5*p5".
    std::string str() const;

    // Builder used by the arithmetic kernels: adds c*X^e, erasing the term
    // if the sum cancels.
    void add_term(const Expvec& e, const Rat& c);

private:
    void check_same_ring(const MPoly& o) const;

    int nvars_;
    std::string tag_;
    TermMap terms_;
};

inline MPoly zero_like(const MPoly& m) { return MPoly::zero(m.nvars(), m.tag()); }
inline MPoly one_like(const MPoly& m) { return MPoly::constant(m.nvars(), Rat(1), m.tag()); }

} // namespace symnorm
