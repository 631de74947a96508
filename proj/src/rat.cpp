#include "symnorm/rat.hpp"

namespace symnorm {

Rat::Rat(long num, long den) : v_(num, den) {
    if (den == 0)
        throw std::domain_error("Rat: zero denominator");
    canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero())
        throw std::domain_error("Rat: division by zero");
    v_ /= o.v_;
    return *this;
}

Rat Rat::parse(std::string_view s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) {
            mpq_class q(std::string(s), 10);
            return Rat(q);
        }
        mpz_class num(std::string(s.substr(0, slash)), 10);
        mpz_class den(std::string(s.substr(slash + 1)), 10);
        if (den == 0)
            throw std::domain_error("Rat: zero denominator");
        mpq_class q(num, den);
        return Rat(q);
    } catch (const std::invalid_argument&) {
        throw std::domain_error("Rat: cannot parse '" + std::string(s) + "'");
    }
}

Rat Rat::from_double(double d) {
    mpq_class q;
    mpq_set_d(q.get_mpq_t(), d);
    return Rat(q);
}

Rat Rat::factorial(unsigned k) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return Rat(f);
}

Rat Rat::pow(unsigned e) const {
    Rat base = *this, acc(1);
    while (e) {
        if (e & 1u) acc *= base;
        base *= base;
        e >>= 1u;
    }
    return acc;
}

std::string Rat::str() const {
    if (is_integer())
        return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

} // namespace symnorm
