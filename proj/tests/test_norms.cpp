#include "symnorm/norms.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace symnorm;

TEST_SUITE_BEGIN("norms");

TEST_CASE("pnorm basics") {
    const std::vector<double> constant = {2.5, 2.5, 2.5};
    for (double p : {0.0, 0.5, 1.0, 2.0, 7.5})
        CHECK(pnorm(constant, p) == doctest::Approx(2.5).epsilon(1e-14));

    const std::vector<double> v = {1.0, 0.0};
    CHECK(pnorm(v, 2.0) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
    const std::vector<double> w = {1.0, 4.0};
    CHECK(pnorm(w, 0.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(pnorm(v, 0.0) == 0.0);

    CHECK_THROWS_AS(pnorm(v, -1.0), std::domain_error);
    const std::vector<double> neg = {1.0, -0.5};
    CHECK_THROWS_AS(pnorm(neg, 1.0), std::domain_error);
}

TEST_CASE("pnorm is nondecreasing in p") {
    std::mt19937_64 rng(5150);
    std::uniform_real_distribution<double> dist(0.0, 10.0);
    for (int iter = 0; iter < 50; ++iter) {
        std::vector<double> x(4);
        for (double& v : x) v = dist(rng);
        double prev = pnorm(x, 0.0);
        for (double p = 0.25; p <= 6.0; p += 0.25) {
            const double cur = pnorm(x, p);
            CHECK(cur >= prev - 1e-12 * std::max(1.0, cur));
            prev = cur;
        }
    }
}

TEST_CASE("kernels vanish at zero and are positive beyond") {
    for (int r = 0; r <= 4; ++r) CHECK(psi_kernel(r, 0.0) == 0.0);
    for (int r = 1; r <= 4; ++r) CHECK(phi_kernel(r, 0.0) == 0.0);

    for (double t : {0.1, 1.0, 10.0})
        CHECK(psi_kernel(1, t) == doctest::Approx(t - std::log1p(t)).epsilon(1e-12));

    for (int r = 0; r <= 4; ++r)
        for (double t = 1e-6; t < 1e7; t *= 10.0) CHECK(psi_kernel(r, t) > 0.0);
    for (int r = 1; r <= 4; ++r)
        for (double t = 1e-6; t < 1e7; t *= 10.0) CHECK(phi_kernel(r, t) > 0.0);
}

TEST_CASE("kernel series and closed form agree at the switch point") {
    for (int r = 0; r <= 4; ++r) {
        const double t = 0.5 - 1e-9; // series side
        const double closed = (r % 2 == 0 ? 1.0 : -1.0) *
                              (std::log1p(t) - [&] {
                                  double acc = 0.0, power = 1.0;
                                  for (int m = 1; m <= r; ++m) {
                                      power *= t;
                                      acc += (m % 2 == 1 ? power : -power) / m;
                                  }
                                  return acc;
                              }());
        CHECK(psi_kernel(r, t) == doctest::Approx(closed).epsilon(1e-10));
    }
}

TEST_CASE("kernel decay and growth rates") {
    // psi_r(t)/t^(r+1) stays bounded (tends to 1/(r+1)) as t -> 0+
    for (int r = 0; r <= 4; ++r)
        for (double t = 1e-1; t >= 1e-6; t /= 10.0) {
            const double ratio = psi_kernel(r, t) / std::pow(t, r + 1);
            CHECK(ratio > 0.0);
            CHECK(ratio <= 1.0 / (r + 1) + 1e-9);
        }
    // psi_r(t)/t^r bounded as t -> infinity (r >= 1)
    for (int r = 1; r <= 4; ++r)
        for (double t = 1e1; t <= 1e6; t *= 10.0)
            CHECK(psi_kernel(r, t) / std::pow(t, r) <= 1.0 / r + 1e-9);
    // phi analogues
    for (int r = 1; r <= 4; ++r) {
        for (double t = 1e-1; t >= 1e-3; t /= 10.0)
            CHECK(phi_kernel(r, t) / std::pow(t, 2 * r) <= 0.5 + 1e-9);
        for (double t = 1e1; t <= 1e4; t *= 10.0)
            CHECK(phi_kernel(r, t) / std::pow(t, r) <= 1.0 + 1e-9);
    }
}

TEST_CASE("mellin constants match the closed forms") {
    struct Case { Kernel kern; int r; double p; };
    for (const Case& c : {Case{Kernel::Psi, 0, 0.5}, Case{Kernel::Psi, 1, 1.5},
                          Case{Kernel::Psi, 2, 2.5}, Case{Kernel::Psi, 3, 3.25},
                          Case{Kernel::Phi, 1, 1.5}, Case{Kernel::Phi, 2, 3.0},
                          Case{Kernel::Phi, 3, 4.5}}) {
        const Quadrature q = mellin_constant(c.kern, c.r, c.p);
        CHECK(q.converged);
        const double want = mellin_constant_closed_form(c.kern, c.r, c.p);
        CHECK(want > 0.0);
        CHECK(std::abs(q.value - want) / want < 1e-8);
    }
    CHECK_THROWS_AS(mellin_constant(Kernel::Psi, 1, 2.5), std::domain_error);
    CHECK_THROWS_AS(mellin_constant(Kernel::Phi, 2, 4.5), std::domain_error);
    CHECK_THROWS_AS(mellin_constant_closed_form(Kernel::Psi, 2, 2.0), std::domain_error);
}

TEST_CASE("power representation reproduces a^p") {
    CHECK(power_representation_rel_error(Kernel::Psi, 1, 1.0, 1.5) < 1e-10);
    CHECK(power_representation_rel_error(Kernel::Psi, 1, 2.0, 1.5) < 1e-8);
    CHECK(power_representation_rel_error(Kernel::Psi, 2, 0.5, 2.5) < 1e-8);
    CHECK(power_representation_rel_error(Kernel::Phi, 2, 10.0, 3.0) < 1e-8);
    CHECK_THROWS_AS(power_representation_rel_error(Kernel::Psi, 1, -2.0, 1.5),
                    std::domain_error);
}

TEST_CASE("exact family values at rational points") {
    const std::vector<Rat> x = {Rat(3), Rat(1)};
    // H_{1,2}(x) = (x1+x2)^2 = 16
    CHECK(H_value(1, 2, x) == Rat(16));
    // G_{2,2}(x) = p1^2/2 = 8
    CHECK(G_value(2, 2, x) == Rat(8));
    // F_{2,1} = e_2 = 3
    CHECK(F_value(2, 1, x) == Rat(3));
    // F beyond nr vanishes
    CHECK(F_value(5, 2, x) == Rat(0));
}

TEST_CASE("check_theorem on the equal pair") {
    const std::vector<Rat> x = {Rat(1, 2), Rat(2), Rat(5, 4)};
    for (TheoremFamily fam : {TheoremFamily::A_F, TheoremFamily::T1_G, TheoremFamily::T3_H}) {
        const TheoremVerdict v = check_theorem(fam, 2, x, x);
        CHECK(v.hypothesis_satisfied);
        CHECK(v.sum_ok);
        CHECK(!v.counterexample);
        for (const PMargin& m : v.margins) CHECK(std::abs(m.margin) < 1e-14);
    }
}

TEST_CASE("check_theorem H example x=(3,1) y=(2,2)") {
    const std::vector<Rat> x = {Rat(3), Rat(1)};
    const std::vector<Rat> y = {Rat(2), Rat(2)};
    const TheoremVerdict v = check_theorem(TheoremFamily::T3_H, 2, x, y);
    CHECK(v.sum_ok);
    CHECK(v.hypothesis_satisfied); // H is Schur concave and x majorizes y
    CHECK(!v.counterexample);
    for (const PMargin& m : v.margins) {
        CHECK(m.p >= 2.0);
        CHECK(m.p <= 4.0);
        CHECK(m.margin >= -1e-12); // ||x||_p >= ||y||_p on [2,4]
    }
}

TEST_CASE("check_theorem flags broken conclusions only when hypotheses hold") {
    // x majorizes y strictly, so for G (r=2, Schur convex) the hypothesis
    // holds with x on the left; swapping the roles breaks the hypothesis and
    // must not be reported as a counterexample.
    const std::vector<Rat> x = {Rat(4), Rat(0)};
    const std::vector<Rat> y = {Rat(2), Rat(2)};
    const TheoremVerdict good = check_theorem(TheoremFamily::T1_G, 2, x, y);
    CHECK(good.hypothesis_satisfied);
    CHECK(!good.counterexample);
    const TheoremVerdict swapped = check_theorem(TheoremFamily::T1_G, 2, y, x);
    CHECK(!swapped.hypothesis_satisfied);
    CHECK(!swapped.failing_k.empty());
    CHECK(!swapped.counterexample);
}

TEST_CASE("majorization pairs preserve the sum exactly") {
    std::mt19937_64 rng(2718);
    for (int iter = 0; iter < 50; ++iter) {
        const auto [x, y] = majorization_pair(4, rng);
        CHECK(rat_power_sum(x, 1) == rat_power_sum(y, 1));
    }
}

TEST_CASE("fuzz smoke runs find no counterexamples") {
    for (int r : {0, 1, 2}) {
        const FuzzReport rep = fuzz_theorem(TheoremFamily::T1_G, r, 4, 150, 31337);
        CHECK(rep.counterexamples == 0);
        CHECK(rep.hypothesis_satisfied == rep.pairs);
    }
    const FuzzReport h = fuzz_theorem(TheoremFamily::T3_H, 2, 3, 150, 31337);
    CHECK(h.counterexamples == 0);
    CHECK(h.hypothesis_satisfied == h.pairs);
    const FuzzReport f = fuzz_theorem(TheoremFamily::A_F, 2, 3, 150, 31337);
    CHECK(f.counterexamples == 0);
    CHECK(f.hypothesis_satisfied == f.pairs);
}

TEST_CASE("exact gradients agree with central finite differences") {
    const MPoly f = compute_G(3, 2, 3, Route::CycleIndex);
    const auto grad = gradient(f);
    std::mt19937_64 rng(161803);
    std::uniform_int_distribution<int> num(1, 20);
    std::uniform_int_distribution<int> den(1, 5);
    const Rat h(1, 100000);
    for (int iter = 0; iter < 20; ++iter) {
        std::vector<Rat> pt;
        for (int i = 0; i < 3; ++i) pt.emplace_back(num(rng), den(rng));
        for (int i = 0; i < 3; ++i) {
            std::vector<Rat> up = pt, dn = pt;
            up[static_cast<std::size_t>(i)] += h;
            dn[static_cast<std::size_t>(i)] -= h;
            const Rat fd = (f.evaluate(up) - f.evaluate(dn)) / (Rat(2) * h);
            const Rat exact = grad[static_cast<std::size_t>(i)].evaluate(pt);
            const double rel = std::abs((fd - exact).to_double()) /
                               std::max(1.0, std::abs(exact.to_double()));
            CHECK(rel < 1e-6);
        }
    }
}

TEST_CASE("schur-ostrowski sampling") {
    // e_k via r=1: -e_k is Schur convex, so G with r=1 must pass
    const auto e = schur_ostrowski_check(Family::G, 2, 1, 3, 100, 9001);
    CHECK(e.violations == 0);
    // G_{2,2} = p1^2/2: the criterion holds with equality everywhere
    const auto flat = schur_ostrowski_check(Family::G, 2, 2, 3, 100, 9001);
    CHECK(flat.violations == 0);
    CHECK(flat.strict == 0);
    // H_{2,2} at n=3
    const auto h = schur_ostrowski_check(Family::H, 2, 2, 3, 100, 9001);
    CHECK(h.violations == 0);
    CHECK(h.strict > 0);
}

TEST_SUITE_END();
