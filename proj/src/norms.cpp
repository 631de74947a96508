#include "symnorm/norms.hpp"

#include "symnorm/tseries.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace symnorm {

double pnorm(std::span<const double> x, double p) {
    if (x.empty()) throw std::invalid_argument("pnorm: empty vector");
    if (p < 0) throw std::domain_error("pnorm: p < 0 unsupported");
    for (double v : x)
        if (v < 0) throw std::domain_error("pnorm: negative entry");
    const double n = static_cast<double>(x.size());
    if (p == 0.0) {
        double logsum = 0.0;
        for (double v : x) {
            if (v == 0.0) return 0.0;
            logsum += std::log(v);
        }
        return std::exp(logsum / n);
    }
    double s = 0.0;
    for (double v : x) s += std::pow(v, p);
    return std::pow(s / n, 1.0 / p);
}

// Tail of log(1+t) past degree r, with the sign flip:
// psi_r(t) = sum_{m>r} (-1)^(m-r-1) t^m/m = t^(r+1) * sigma_r(t).
static double psi_sigma(int r, double t) {
    double acc = 0.0, power = 1.0;
    for (int j = 0;; ++j) {
        const double term = power / static_cast<double>(r + 1 + j);
        acc += (j % 2 == 0) ? term : -term;
        power *= t;
        if (std::abs(power / static_cast<double>(r + 2 + j)) < 1e-18 * std::abs(acc)) break;
        if (j > 400) break;
    }
    return acc;
}

static double q_taylor_log(int r, double t) {
    double acc = 0.0, power = 1.0;
    for (int m = 1; m <= r; ++m) {
        power *= t;
        acc += (m % 2 == 1 ? power : -power) / static_cast<double>(m);
    }
    return acc;
}

double psi_kernel(int r, double t) {
    if (r < 0 || t < 0) throw std::domain_error("psi_kernel: need r >= 0, t >= 0");
    if (t < 0.5) return std::pow(t, r + 1) * psi_sigma(r, t);
    const double v = std::log1p(t) - q_taylor_log(r, t);
    return (r % 2 == 0) ? v : -v;
}

double phi_kernel(int r, double t) {
    if (r < 1 || t < 0) throw std::domain_error("phi_kernel: need r >= 1, t >= 0");
    const double u = std::pow(t, r);
    if (u < 0.5) return u * u * psi_sigma(1, u);
    return u - std::log1p(u);
}

bool in_mellin_window(Kernel kern, int r, double p) {
    if (kern == Kernel::Psi) return r >= 0 && p > r && p < r + 1;
    return r >= 1 && p > r && p < 2.0 * r;
}

double mellin_constant_closed_form(Kernel kern, int r, double p) {
    if (!in_mellin_window(kern, r, p))
        throw std::domain_error("mellin_constant_closed_form: p outside convergence window");
    const double pi = std::numbers::pi;
    if (kern == Kernel::Psi) return pi / (p * std::sin(pi * (r + 1 - p)));
    return -pi / (p * std::sin(pi * p / r));
}

// --- adaptive Gauss-Kronrod quadrature ---

namespace {

// 15-point Kronrod / 7-point Gauss pair (QUADPACK abscissae and weights).
constexpr double kGK15Nodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kGK15WeightsK[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kGK15WeightsG[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class F>
std::pair<double, double> gk15(const F& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(mid);
    double k15 = kGK15WeightsK[7] * fc;
    double g7 = kGK15WeightsG[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kGK15Nodes[i];
        const double fsum = f(mid - dx) + f(mid + dx);
        k15 += kGK15WeightsK[i] * fsum;
        if (i % 2 == 1) g7 += kGK15WeightsG[i / 2] * fsum;
    }
    k15 *= half;
    g7 *= half;
    const double diff = std::abs(k15 - g7);
    const double err = std::min(diff, std::pow(200.0 * diff, 1.5));
    return {k15, std::max(err, 50.0 * 1e-17 * std::abs(k15))};
}

struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

// Worst-panel-first refinement over (0, 1]; the integrable endpoint
// singularity at 0 is handled by the dyadic seed panels plus adaptivity.
template <class F>
Quadrature adaptive_unit_interval(const F& f, double rel_tol, int max_panels = 6000) {
    std::priority_queue<Panel> heap;
    double total = 0.0, err = 0.0;
    int npanels = 0;
    auto push = [&](double a, double b) {
        auto [v, e] = gk15(f, a, b);
        heap.push(Panel{a, b, v, e});
        total += v;
        err += e;
        ++npanels;
    };
    double lo = 1.0;
    for (int i = 0; i < 24; ++i) {
        push(lo * 0.5, lo);
        lo *= 0.5;
    }
    push(0.0, lo);
    while (npanels < max_panels) {
        if (err <= rel_tol * std::abs(total) || err < 1e-300) break;
        Panel worst = heap.top();
        heap.pop();
        total -= worst.value;
        err -= worst.error;
        --npanels;
        const double mid = 0.5 * (worst.a + worst.b);
        push(worst.a, mid);
        push(mid, worst.b);
    }
    Quadrature q;
    q.value = total;
    q.abs_error = err;
    q.panels = npanels;
    q.converged = err <= rel_tol * std::abs(total);
    return q;
}

// kernel(a*t) * t^(-p-1), evaluated so that neither the kernel's small-s
// cancellation nor large-s overflow can occur. s = a*t.
double mellin_integrand(Kernel kern, int r, double p, double a, double t) {
    const double s = a * t;
    if (kern == Kernel::Psi) {
        if (s < 0.5) {
            // a^(r+1) t^(r-p) sigma_r(s)
            return std::exp((r + 1) * std::log(a) + (r - p) * std::log(t)) * psi_sigma(r, s);
        }
        if (s <= 2.0) return psi_kernel(r, s) * std::pow(t, -p - 1.0);
        // Term-by-term: (-1)^r log(1+s) t^(-p-1) + sum (-1)^(r+m) s^m/m t^(-p-1)
        double acc = (r % 2 == 0 ? 1.0 : -1.0) * std::log1p(s) * std::pow(t, -p - 1.0);
        for (int m = 1; m <= r; ++m) {
            const double term =
                std::pow(a, m) * std::pow(t, m - p - 1.0) / static_cast<double>(m);
            acc += ((r + m) % 2 == 0) ? term : -term;
        }
        return acc;
    }
    const double v = std::pow(s, r);
    if (v < 0.5) {
        // a^(2r) t^(2r-p) sigma_1(s^r) / t
        return std::exp(2.0 * r * std::log(a) + (2.0 * r - p - 1.0) * std::log(t)) *
               psi_sigma(1, v);
    }
    if (v <= 1e15) return (v - std::log1p(v)) * std::pow(t, -p - 1.0);
    // log(1+s^r) = r log s to double precision here
    return std::pow(a, r) * std::pow(t, r - p - 1.0) -
           r * std::log(s) * std::pow(t, -p - 1.0);
}

} // namespace

static Quadrature mellin_integral(Kernel kern, int r, double p, double a, double rel_tol) {
    auto head = [=](double t) { return mellin_integrand(kern, r, p, a, t); };
    auto tail = [=](double u) { return mellin_integrand(kern, r, p, a, 1.0 / u) / (u * u); };
    const Quadrature qh = adaptive_unit_interval(head, rel_tol * 0.5);
    const Quadrature qt = adaptive_unit_interval(tail, rel_tol * 0.5);
    Quadrature q;
    q.value = qh.value + qt.value;
    q.abs_error = qh.abs_error + qt.abs_error;
    q.panels = qh.panels + qt.panels;
    q.converged = qh.converged && qt.converged;
    return q;
}

Quadrature mellin_constant(Kernel kern, int r, double p, double rel_tol) {
    if (!in_mellin_window(kern, r, p))
        throw std::domain_error("mellin_constant: p outside convergence window");
    return mellin_integral(kern, r, p, 1.0, rel_tol);
}

double power_representation_rel_error(Kernel kern, int r, double a, double p, double rel_tol) {
    if (!in_mellin_window(kern, r, p))
        throw std::domain_error("power_representation: p outside convergence window");
    if (a <= 0) throw std::domain_error("power_representation: need a > 0");
    const Quadrature c = mellin_constant(kern, r, p, rel_tol);
    const Quadrature num = mellin_integral(kern, r, p, a, rel_tol);
    const double got = num.value / c.value;
    const double want = std::pow(a, p);
    return std::abs(got - want) / want;
}

// --- exact point evaluation ---

Rat rat_power_sum(std::span<const Rat> x, int m) {
    Rat s;
    for (const Rat& v : x) s += v.pow(static_cast<unsigned>(m));
    return s;
}

Rat F_value(int k, int r, std::span<const Rat> x) {
    if (k < 1 || r < 1) throw std::invalid_argument("F_value: need k, r >= 1");
    RatSeries prod = RatSeries::constant(k, Rat(1));
    for (const Rat& v : x) {
        RatSeries factor(k, Rat());
        factor.set_coeff(0, Rat(1));
        Rat numer(1), fact(1);
        for (int j = 1; j <= std::min(r, k); ++j) {
            numer *= v;
            fact *= Rat(j);
            factor.set_coeff(j, numer / fact);
        }
        prod = prod * factor;
    }
    return prod.coeff(k);
}

static Rat zk_value(Family fam, int k, int r, std::span<const Rat> x) {
    std::function<Rat(int)> p_of = [&x](int m) { return rat_power_sum(x, m); };
    return zk_determinant(alpha_values<Rat>(fam, r, k, p_of), k);
}

Rat G_value(int k, int r, std::span<const Rat> x) { return zk_value(Family::G, k, r, x); }
Rat H_value(int k, int r, std::span<const Rat> x) { return zk_value(Family::H, k, r, x); }

// --- theorem checkers ---

const char* theorem_family_name(TheoremFamily f) {
    switch (f) {
        case TheoremFamily::A_F: return "A-F";
        case TheoremFamily::T1_G: return "1-G";
        case TheoremFamily::T3_H: return "3-H";
    }
    return "?";
}

static std::vector<double> to_doubles(std::span<const Rat> x) {
    std::vector<double> d;
    d.reserve(x.size());
    for (const Rat& v : x) d.push_back(v.to_double());
    return d;
}

namespace {

struct Interval {
    double lo, hi;
    int direction; // +1: require |x| >= |y|, -1: require |x| <= |y|
};

void scan_interval(const Interval& iv, std::span<const double> dx, std::span<const double> dy,
                   const TheoremOptions& opt, TheoremVerdict& verdict) {
    const int steps = std::max(1, static_cast<int>(std::ceil((iv.hi - iv.lo) / opt.grid_step)));
    for (int s = 0; s <= steps; ++s) {
        const double p = std::min(iv.hi, iv.lo + s * opt.grid_step);
        const double nx = pnorm(dx, p);
        const double ny = pnorm(dy, p);
        const double margin = iv.direction > 0 ? nx - ny : ny - nx;
        verdict.margins.push_back(PMargin{p, nx, ny, margin});
        const double scale = std::max({std::abs(nx), std::abs(ny), 1.0});
        if (margin < -opt.rel_tol * scale) verdict.counterexample = true;
        if (p == iv.hi) break;
    }
}

} // namespace

TheoremVerdict check_theorem(TheoremFamily fam, int r, std::span<const Rat> x,
                             std::span<const Rat> y, const TheoremOptions& opt) {
    if (x.size() != y.size())
        throw std::invalid_argument("check_theorem: x and y must be the same length");
    const int n = static_cast<int>(x.size());
    if ((fam == TheoremFamily::A_F || fam == TheoremFamily::T3_H) && r < 1)
        throw std::invalid_argument("check_theorem: family needs r >= 1");
    if (fam == TheoremFamily::T1_G && r < 0)
        throw std::invalid_argument("check_theorem: G needs r >= 0");

    TheoremVerdict verdict;
    verdict.sum_residual = rat_power_sum(x, 1) - rat_power_sum(y, 1);
    verdict.sum_ok = verdict.sum_residual.is_zero();

    // Exact polynomial hypotheses.
    verdict.hypothesis_satisfied = true;
    if (fam == TheoremFamily::A_F) {
        verdict.k_max_used = n * r;
        for (int k = r; k <= n * r; ++k) {
            if (!(F_value(k, r, x) <= F_value(k, r, y))) {
                verdict.hypothesis_satisfied = false;
                verdict.failing_k.push_back(k);
            }
        }
    } else {
        verdict.k_max_used = opt.k_max;
        for (int k = 1; k <= opt.k_max; ++k) {
            bool ok;
            if (fam == TheoremFamily::T1_G) {
                const Rat d = G_value(k, r, x) - G_value(k, r, y);
                ok = (r % 2 == 0) ? d.sign() >= 0 : d.sign() <= 0;
            } else {
                ok = H_value(k, r, x) <= H_value(k, r, y);
            }
            if (!ok) {
                verdict.hypothesis_satisfied = false;
                verdict.failing_k.push_back(k);
            }
        }
    }

    const auto dx = to_doubles(x);
    const auto dy = to_doubles(y);
    if (verdict.hypothesis_satisfied) {
        if (fam == TheoremFamily::A_F) {
            // ||x||_p <= ||y||_p on [0,1]; with equal sums, >= on [1, r+1].
            scan_interval(Interval{0.0, 1.0, -1}, dx, dy, opt, verdict);
            if (verdict.sum_ok)
                scan_interval(Interval{1.0, static_cast<double>(r + 1), +1}, dx, dy, opt,
                              verdict);
        } else if (verdict.sum_ok) {
            const double hi = fam == TheoremFamily::T1_G ? r + 1.0 : 2.0 * r;
            scan_interval(Interval{static_cast<double>(r), hi, +1}, dx, dy, opt, verdict);
        }
    }
    if (!verdict.hypothesis_satisfied) verdict.counterexample = false;
    return verdict;
}

TheoremVerdict check_theorem(TheoremFamily fam, int r, std::span<const double> x,
                             std::span<const double> y, const TheoremOptions& opt) {
    std::vector<Rat> rx, ry;
    rx.reserve(x.size());
    ry.reserve(y.size());
    for (double v : x) rx.push_back(Rat::from_double(v));
    for (double v : y) ry.push_back(Rat::from_double(v));
    return check_theorem(fam, r, rx, ry, opt);
}

// --- majorization fuzzing ---

std::pair<std::vector<Rat>, std::vector<Rat>> majorization_pair(int n, std::mt19937_64& rng,
                                                                int transforms) {
    if (n < 2) throw std::invalid_argument("majorization_pair: need n >= 2");
    std::uniform_int_distribution<int> num(0, 48);
    std::uniform_int_distribution<int> den(1, 8);
    std::vector<Rat> x;
    x.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) x.emplace_back(num(rng), den(rng));
    std::vector<Rat> y = x;
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::uniform_int_distribution<int> lden(1, 16);
    for (int t = 0; t < transforms; ++t) {
        int i = pick(rng), j = pick(rng);
        if (i == j) continue;
        const int b = lden(rng);
        std::uniform_int_distribution<int> lnum(0, b);
        const Rat lambda(lnum(rng), b);
        const Rat yi = lambda * y[static_cast<std::size_t>(i)] +
                       (Rat(1) - lambda) * y[static_cast<std::size_t>(j)];
        const Rat yj = (Rat(1) - lambda) * y[static_cast<std::size_t>(i)] +
                       lambda * y[static_cast<std::size_t>(j)];
        y[static_cast<std::size_t>(i)] = yi;
        y[static_cast<std::size_t>(j)] = yj;
    }
    return {std::move(x), std::move(y)};
}

static std::string dump_pair(std::span<const Rat> x, std::span<const Rat> y) {
    std::ostringstream out;
    out << "x = [";
    for (std::size_t i = 0; i < x.size(); ++i) out << (i ? "," : "") << x[i].str();
    out << "], y = [";
    for (std::size_t i = 0; i < y.size(); ++i) out << (i ? "," : "") << y[i].str();
    out << "]";
    return out.str();
}

FuzzReport fuzz_theorem(TheoremFamily fam, int r, int n, int pairs, std::uint64_t seed,
                        const TheoremOptions& opt) {
    std::mt19937_64 rng(seed);
    FuzzReport report;
    report.family = fam;
    report.r = r;
    report.n = n;
    report.pairs = pairs;
    report.min_margin = std::numeric_limits<double>::infinity();
    report.max_margin = -std::numeric_limits<double>::infinity();
    for (int it = 0; it < pairs; ++it) {
        auto [x, y] = majorization_pair(n, rng);
        // Theorem 1 with r = 0 runs against the averaging direction: G_{k,0}
        // is e_k, whose hypothesis wants the majorized vector on the left.
        if (fam == TheoremFamily::T1_G && r == 0) std::swap(x, y);
        const TheoremVerdict v = check_theorem(fam, r, x, y, opt);
        report.k_max_used = v.k_max_used;
        if (v.hypothesis_satisfied) ++report.hypothesis_satisfied;
        for (const PMargin& m : v.margins) {
            report.min_margin = std::min(report.min_margin, m.margin);
            report.max_margin = std::max(report.max_margin, m.margin);
        }
        if (v.counterexample) {
            ++report.counterexamples;
            if (report.first_failure.empty()) report.first_failure = dump_pair(x, y);
        }
    }
    if (report.min_margin > report.max_margin) report.min_margin = report.max_margin = 0.0;
    return report;
}

// --- Schur-Ostrowski sampling ---

SchurOstrowskiReport schur_ostrowski_check(Family fam, int k, int r, int n, int samples,
                                           std::uint64_t seed) {
    if (fam == Family::F) throw std::invalid_argument("schur_ostrowski_check: F unsupported");
    if (n < 2) throw std::invalid_argument("schur_ostrowski_check: need n >= 2");
    const MPoly f = fam == Family::G ? compute_G(k, r, n, Route::CycleIndex)
                                     : compute_H(k, r, n, Route::CycleIndex);
    const std::vector<MPoly> grad = gradient(f);
    // Required sign of (x_i-x_j)(df_i-df_j): >= 0 for (-1)^r G (Schur
    // convex), <= 0 for H (Schur concave).
    const int want = fam == Family::G ? (r % 2 == 0 ? +1 : -1) : -1;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(0, 32);
    std::uniform_int_distribution<int> den(1, 8);
    std::uniform_int_distribution<int> pick(0, n - 1);

    SchurOstrowskiReport report;
    report.family = fam;
    report.k = k;
    report.r = r;
    report.n = n;
    report.samples = samples;
    for (int s = 0; s < samples; ++s) {
        std::vector<Rat> pt;
        pt.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) pt.emplace_back(num(rng), den(rng));
        int i = pick(rng), j = pick(rng);
        while (j == i) j = pick(rng);
        const Rat diff = grad[static_cast<std::size_t>(i)].evaluate(pt) -
                         grad[static_cast<std::size_t>(j)].evaluate(pt);
        const Rat val = (pt[static_cast<std::size_t>(i)] - pt[static_cast<std::size_t>(j)]) * diff;
        const int sign = val.sign() * want;
        if (sign < 0) {
            ++report.violations;
            if (report.first_violation.empty()) {
                std::ostringstream out;
                out << "point = [";
                for (int q = 0; q < n; ++q) out << (q ? "," : "") << pt[static_cast<std::size_t>(q)].str();
                out << "], i=" << i + 1 << ", j=" << j + 1 << ", value=" << val.str();
                report.first_violation = out.str();
            }
        } else if (sign > 0) {
            ++report.strict;
        }
    }
    return report;
}

} // namespace symnorm
