#pragma once

#include "symnorm/mpoly.hpp"
#include "symnorm/rat.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace symnorm {

// Truncated univariate power series in t over Rat or MPoly coefficients,
// known modulo t^(K+1). The order is explicit and carried by the value;
// binary operations truncate to the smaller order.
template <class C>
class TSeries {
public:
    TSeries(int order, const C& ring_sample)
        : coeffs_(static_cast<std::size_t>(order) + 1, zero_like(ring_sample)) {
        if (order < 0) throw std::invalid_argument("TSeries: negative order");
    }

    static TSeries constant(int order, const C& value) {
        TSeries s(order, value);
        s.coeffs_[0] = value;
        return s;
    }

    // c * t^k
    static TSeries term(int order, int k, const C& value) {
        TSeries s(order, value);
        if (k < 0) throw std::invalid_argument("TSeries::term: negative power");
        if (k <= order) s.coeffs_[static_cast<std::size_t>(k)] = value;
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const C& coeff(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    void set_coeff(int k, const C& v) { coeffs_.at(static_cast<std::size_t>(k)) = v; }

    TSeries truncated(int new_order) const {
        TSeries s(std::min(new_order, order()), coeffs_[0]);
        for (int k = 0; k <= s.order(); ++k) s.coeffs_[k] = coeffs_[k];
        return s;
    }

    friend TSeries operator+(const TSeries& a, const TSeries& b) {
        const int K = std::min(a.order(), b.order());
        TSeries r(K, a.coeffs_[0]);
        for (int k = 0; k <= K; ++k) r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
        return r;
    }

    friend TSeries operator-(const TSeries& a, const TSeries& b) {
        const int K = std::min(a.order(), b.order());
        TSeries r(K, a.coeffs_[0]);
        for (int k = 0; k <= K; ++k) r.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
        return r;
    }

    // Cauchy product truncated at the common order.
    friend TSeries operator*(const TSeries& a, const TSeries& b) {
        const int K = std::min(a.order(), b.order());
        TSeries r(K, a.coeffs_[0]);
        for (int i = 0; i <= K; ++i) {
            if (is_zero_coeff(a.coeffs_[i])) continue;
            for (int j = 0; i + j <= K; ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return r;
    }

    TSeries scaled(const Rat& c) const {
        TSeries r(order(), coeffs_[0]);
        for (int k = 0; k <= order(); ++k) r.coeffs_[k] = scale_coeff(coeffs_[k], c);
        return r;
    }

    friend bool operator==(const TSeries& a, const TSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }

    bool is_zero() const {
        for (const C& c : coeffs_)
            if (!is_zero_coeff(c)) return false;
        return true;
    }

    // exp of a series with zero constant term, via E' = a'E: one convolution
    // step per coefficient, exact over Rat.
    TSeries exp_series() const {
        if (!is_zero_coeff(coeffs_[0]))
            throw std::domain_error("TSeries::exp_series: nonzero constant term");
        const int K = order();
        TSeries e(K, coeffs_[0]);
        e.coeffs_[0] = one_like(coeffs_[0]);
        for (int k = 1; k <= K; ++k) {
            C acc = zero_like(coeffs_[0]);
            for (int j = 1; j <= k; ++j)
                acc += scale_coeff(coeffs_[j] * e.coeffs_[k - j], Rat(j));
            e.coeffs_[k] = scale_coeff(acc, Rat(1, k));
        }
        return e;
    }

    // log of a series with constant term 1, via a L' = a'.
    TSeries log_series() const {
        if (!(coeffs_[0] == one_like(coeffs_[0])))
            throw std::domain_error("TSeries::log_series: constant term must be 1");
        const int K = order();
        TSeries l(K, coeffs_[0]);
        l.coeffs_[0] = zero_like(coeffs_[0]);
        for (int k = 1; k <= K; ++k) {
            C acc = coeffs_[k];
            for (int j = 1; j < k; ++j)
                acc -= scale_coeff(l.coeffs_[j] * coeffs_[k - j], Rat(j, k));
            l.coeffs_[k] = acc;
        }
        return l;
    }

private:
    static bool is_zero_coeff(const Rat& c) { return c.is_zero(); }
    static bool is_zero_coeff(const MPoly& c) { return c.is_zero(); }
    static Rat scale_coeff(const Rat& c, const Rat& s) { return c * s; }
    static MPoly scale_coeff(const MPoly& c, const Rat& s) { return c.scaled(s); }

    std::vector<C> coeffs_;
};

using RatSeries = TSeries<Rat>;
using PolySeries = TSeries<MPoly>;

} // namespace symnorm
