#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace symnorm {

// Exact rational scalar. Always in lowest terms with positive denominator;
// every operation is exact.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long num, long den);
    explicit Rat(const mpq_class& q) : v_(q) { canonicalize(); }
    explicit Rat(const mpz_class& z) : v_(z) {}

    // Parses "p/q", "-p/q" or a plain integer.
    static Rat parse(std::string_view s);

    // Exact binary rational of a finite double (no rounding).
    static Rat from_double(double d);

    static Rat factorial(unsigned k);
    static Rat from_u64(unsigned long long v) { return Rat(mpz_class(static_cast<unsigned long>(v))); }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat abs() const { return sign() < 0 ? -*this : *this; }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    Rat pow(unsigned e) const;

    double to_double() const { return v_.get_d(); }

    // Canonical text form: "7/40", "-1/4", "3".
    std::string str() const;

private:
    void canonicalize() { v_.canonicalize(); }
    mpq_class v_;
};

inline Rat zero_like(const Rat&) { return Rat(); }
inline Rat one_like(const Rat&) { return Rat(1); }

} // namespace symnorm
