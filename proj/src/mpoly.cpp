#include "symnorm/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace symnorm {

bool GradedLexDesc::operator()(const Expvec& a, const Expvec& b) const {
    const long da = std::accumulate(a.begin(), a.end(), 0L);
    const long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db) return da > db;
    return a > b;
}

MPoly MPoly::constant(int nvars, const Rat& c, std::string tag) {
    MPoly m(nvars, std::move(tag));
    if (!c.is_zero()) m.terms_.emplace(Expvec(nvars, 0), c);
    return m;
}

MPoly MPoly::variable(int nvars, int i, std::string tag) {
    if (i < 1 || i > nvars)
        throw std::out_of_range("MPoly::variable: index out of range");
    Expvec e(nvars, 0);
    e[i - 1] = 1;
    return monomial(nvars, std::move(e), Rat(1), std::move(tag));
}

MPoly MPoly::monomial(int nvars, Expvec e, const Rat& c, std::string tag) {
    if (static_cast<int>(e.size()) != nvars)
        throw std::invalid_argument("MPoly::monomial: exponent vector length mismatch");
    MPoly m(nvars, std::move(tag));
    if (!c.is_zero()) m.terms_.emplace(std::move(e), c);
    return m;
}

Rat MPoly::coeff(const Expvec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat() : it->second;
}

void MPoly::check_same_ring(const MPoly& o) const {
    if (nvars_ != o.nvars_ || tag_ != o.tag_)
        throw std::invalid_argument("MPoly: mismatched rings (" + tag_ + std::to_string(nvars_) +
                                    " vs " + o.tag_ + std::to_string(o.nvars_) + ")");
}

void MPoly::add_term(const Expvec& e, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly r(nvars_, tag_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    check_same_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    check_same_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    a.check_same_ring(b);
    MPoly r(a.nvars_, a.tag_);
    Expvec e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MPoly MPoly::scaled(const Rat& c) const {
    MPoly r(nvars_, tag_);
    if (c.is_zero()) return r;
    for (const auto& [e, t] : terms_) r.terms_.emplace(e, t * c);
    return r;
}

MPoly MPoly::pow(unsigned e) const {
    MPoly acc = constant(nvars_, Rat(1), tag_);
    MPoly base = *this;
    while (e) {
        if (e & 1u) acc = acc * base;
        base = base * base;
        e >>= 1u;
    }
    return acc;
}

bool operator==(const MPoly& a, const MPoly& b) {
    return a.nvars_ == b.nvars_ && a.tag_ == b.tag_ && a.terms_ == b.terms_;
}

MPoly MPoly::partial(int i) const {
    if (i < 1 || i > nvars_)
        throw std::out_of_range("MPoly::partial: index out of range");
    MPoly r(nvars_, tag_);
    for (const auto& [e, c] : terms_) {
        if (e[i - 1] == 0) continue;
        Expvec d = e;
        d[i - 1] -= 1;
        r.add_term(d, c * Rat(e[i - 1]));
    }
    return r;
}

std::optional<MPoly> MPoly::try_divide_exact(const MPoly& g, MPoly* remainder) const {
    check_same_ring(g);
    if (g.is_zero())
        throw std::domain_error("MPoly: division by zero polynomial");
    MPoly q(nvars_, tag_);
    MPoly rem = *this;
    const auto& [lg, cg] = *g.terms_.begin();
    while (!rem.is_zero()) {
        const auto& [lr, cr] = *rem.terms_.begin();
        Expvec d(nvars_);
        bool divisible = true;
        for (int i = 0; i < nvars_; ++i) {
            d[i] = lr[i] - lg[i];
            if (d[i] < 0) { divisible = false; break; }
        }
        if (!divisible) {
            if (remainder) *remainder = rem;
            return std::nullopt;
        }
        MPoly step = monomial(nvars_, d, cr / cg, tag_);
        q += step;
        rem -= step * g;
    }
    if (remainder) *remainder = MPoly::zero(nvars_, tag_);
    return q;
}

MPoly MPoly::divide_exact(const MPoly& g) const {
    MPoly rem;
    auto q = try_divide_exact(g, &rem);
    if (!q)
        throw std::domain_error("MPoly: inexact division, remainder " + rem.str());
    return *q;
}

MPoly::NonnegReport MPoly::coefficientwise_nonneg() const {
    for (const auto& [e, c] : terms_) {
        if (c.sign() < 0)
            return {false, e, c};
    }
    return {};
}

MPoly MPoly::substitute(std::span<const MPoly> images) const {
    if (static_cast<int>(images.size()) != nvars_)
        throw std::invalid_argument("MPoly::substitute: need one image per variable");
    for (std::size_t i = 1; i < images.size(); ++i)
        images[0].check_same_ring(images[i]);
    const int tn = images.empty() ? 0 : images[0].nvars();
    const std::string ttag = images.empty() ? std::string("x") : images[0].tag();
    MPoly r = MPoly::zero(tn, ttag);
    for (const auto& [e, c] : terms_) {
        MPoly term = MPoly::constant(tn, c, ttag);
        for (int i = 0; i < nvars_; ++i)
            if (e[i] > 0) term = term * images[i].pow(static_cast<unsigned>(e[i]));
        r += term;
    }
    return r;
}

Rat MPoly::evaluate(std::span<const Rat> point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw std::invalid_argument("MPoly::evaluate: need one value per variable");
    Rat acc;
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (int i = 0; i < nvars_; ++i)
            if (e[i] > 0) t *= point[i].pow(static_cast<unsigned>(e[i]));
        acc += t;
    }
    return acc;
}

MPoly MPoly::swap_vars(int i, int j) const {
    if (i < 1 || i > nvars_ || j < 1 || j > nvars_)
        throw std::out_of_range("MPoly::swap_vars: index out of range");
    MPoly r(nvars_, tag_);
    for (const auto& [e, c] : terms_) {
        Expvec s = e;
        std::swap(s[i - 1], s[j - 1]);
        r.terms_.emplace(std::move(s), c);
    }
    return r;
}

bool MPoly::is_symmetric() const {
    for (int i = 1; i < nvars_; ++i)
        if (swap_vars(i, i + 1) != *this) return false;
    return true;
}

int MPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const Expvec& lead = terms_.begin()->first;
    return static_cast<int>(std::accumulate(lead.begin(), lead.end(), 0L));
}

std::optional<long> MPoly::homogeneous_degree(std::span<const int> weights) const {
    if (static_cast<int>(weights.size()) != nvars_)
        throw std::invalid_argument("MPoly::homogeneous_degree: weight length mismatch");
    std::optional<long> deg;
    for (const auto& [e, c] : terms_) {
        long d = 0;
        for (int i = 0; i < nvars_; ++i) d += static_cast<long>(e[i]) * weights[i];
        if (!deg) deg = d;
        else if (*deg != d) return std::nullopt;
    }
    return deg;
}

std::optional<long> MPoly::homogeneous_degree() const {
    std::vector<int> w(nvars_, 1);
    return homogeneous_degree(w);
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const Rat a = c.abs();
        if (first) {
            if (c.sign() < 0) out << "-";
            first = false;
        } else {
            out << (c.sign() < 0 ? " - " : " + ");
        }
        const bool has_vars = std::any_of(e.begin(), e.end(), [](int x) { return x > 0; });
        bool need_star = false;
        if (!a.is_one() || !has_vars) {
            out << a.str();
            need_star = true;
        }
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (need_star) out << "*";
            out << tag_ << (i + 1);
            if (e[i] > 1) out << "^" << e[i];
            need_star = true;
        }
    }
    return out.str();
}

} // namespace symnorm
