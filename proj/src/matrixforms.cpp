#include "symnorm/matrixforms.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

namespace symnorm {

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
    return m;
}

Rat RatMatrix::trace() const {
    Rat t;
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("RatMatrix: dimension mismatch");
    RatMatrix c(a.n_);
    for (int i = 0; i < a.n_; ++i)
        for (int l = 0; l < a.n_; ++l) {
            const Rat& ail = a.at(i, l);
            if (ail.is_zero()) continue;
            for (int j = 0; j < a.n_; ++j) c.at(i, j) += ail * b.at(l, j);
        }
    return c;
}

RatMatrix RatMatrix::read(std::istream& in) {
    int n = 0;
    if (!(in >> n) || n < 1) throw std::runtime_error("RatMatrix::read: bad dimension");
    RatMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::string tok;
            if (!(in >> tok))
                throw std::runtime_error("RatMatrix::read: expected " + std::to_string(n * n) +
                                         " entries");
            m.at(i, j) = Rat::parse(tok);
        }
    return m;
}

std::string RatMatrix::str() const {
    std::ostringstream out;
    out << n_ << "\n";
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            if (j) out << " ";
            out << at(i, j).str();
        }
        out << "\n";
    }
    return out.str();
}

Rat trace_power(const RatMatrix& a, int m) {
    if (m < 1) throw std::invalid_argument("trace_power: need m >= 1");
    RatMatrix p = a;
    for (int i = 1; i < m; ++i) p = p * a;
    return p.trace();
}

RatMatrix generalized_submatrix(const RatMatrix& a, const std::vector<int>& index_map) {
    const int k = static_cast<int>(index_map.size());
    for (int v : index_map)
        if (v < 1 || v > a.dim())
            throw std::out_of_range("generalized_submatrix: index out of range");
    RatMatrix b(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            b.at(i, j) = a.at(index_map[static_cast<std::size_t>(i)] - 1,
                              index_map[static_cast<std::size_t>(j)] - 1);
    return b;
}

Rat modified_det_G(const RatMatrix& b, int r, int cap) {
    const int k = b.dim();
    Rat acc;
    for_each_permutation(k, [&](const Perm& p) {
        const Partition type = cycle_type_of(p);
        for (int len : type.parts)
            if (len % 2 == 0 && len <= r) return; // sigma not in S(k,r)
        const Perm pr = sigma_r(p, r);
        Rat prod(1);
        for (int j = 0; j < k; ++j) prod *= b.at(pr[static_cast<std::size_t>(j)], j);
        acc += Rat(permutation_sign(pr)) * prod;
    }, cap);
    return acc;
}

Rat modified_det_H(const RatMatrix& b, int k, int r, int cap) {
    const int kr = b.dim();
    if (kr != k * r) throw std::invalid_argument("modified_det_H: matrix must be kr x kr");
    Rat acc;
    for_each_permutation(kr, [&](const Perm& p) {
        const Partition type = cycle_type_of(p);
        for (int len : type.parts)
            if (len % r != 0) return; // sigma not in T(k,r)
        const Perm pr = sigma_r(p, r);
        Rat prod(1);
        for (int j = 0; j < kr; ++j) prod *= b.at(pr[static_cast<std::size_t>(j)], j);
        if (prod.is_zero()) return;
        prod *= Rat(r).pow(static_cast<unsigned>(type.num_parts()));
        acc += Rat(permutation_sign(p)) * prod;
    }, cap);
    const int sign = (static_cast<long>(k) * (r - 1)) % 2 == 0 ? 1 : -1;
    return Rat(sign) * acc;
}

Rat family_from_traces(Family fam, int k, int r, const RatMatrix& a) {
    // One pass of exact powers: traces of A^1..A^max.
    const int max_power = fam == Family::H ? k * r : k;
    std::vector<Rat> traces;
    traces.reserve(static_cast<std::size_t>(max_power));
    RatMatrix p = a;
    traces.push_back(p.trace());
    for (int m = 2; m <= max_power; ++m) {
        p = p * a;
        traces.push_back(p.trace());
    }
    std::function<Rat(int)> p_of = [&traces](int m) {
        return traces.at(static_cast<std::size_t>(m - 1));
    };
    return zk_determinant(alpha_values<Rat>(fam, r, k, p_of), k);
}

Rat family_from_entries(Family fam, int k, int r, const RatMatrix& a, int cap) {
    const int deg = fam == Family::H ? k * r : k;
    Rat acc;
    for (const MultisetIndex& mi : multiset_indices(a.dim(), deg)) {
        const RatMatrix b = generalized_submatrix(a, mi.index_map);
        const Rat d = fam == Family::H ? modified_det_H(b, k, r, cap) : modified_det_G(b, r, cap);
        Rat denom(1);
        for (int c : mi.counts) denom *= Rat::factorial(static_cast<unsigned>(c));
        acc += d / denom;
    }
    return acc;
}

Rat family_from_entries_full(Family fam, int k, int r, const RatMatrix& a, int cap) {
    const int deg = fam == Family::H ? k * r : k;
    const int n = a.dim();
    std::vector<int> m(static_cast<std::size_t>(deg), 1);
    Rat acc;
    while (true) {
        const RatMatrix b = generalized_submatrix(a, m);
        acc += fam == Family::H ? modified_det_H(b, k, r, cap) : modified_det_G(b, r, cap);
        int i = deg - 1;
        while (i >= 0 && m[static_cast<std::size_t>(i)] == n) --i;
        if (i < 0) break;
        m[static_cast<std::size_t>(i)] += 1;
        for (int j = i + 1; j < deg; ++j) m[static_cast<std::size_t>(j)] = 1;
    }
    return acc / Rat::factorial(static_cast<unsigned>(deg));
}

} // namespace symnorm
