#include "symnorm/mpoly.hpp"

#include <doctest.h>

#include <random>

using namespace symnorm;

namespace {

MPoly xv(int i, int n = 3) { return MPoly::variable(n, i, "x"); }

MPoly random_poly(std::mt19937_64& rng, int n, int max_terms, int max_deg) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> expo(0, max_deg);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    MPoly f = MPoly::zero(n, "x");
    const int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
        Expvec e(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) e[static_cast<std::size_t>(j)] = expo(rng);
        f.add_term(e, Rat(num(rng), den(rng)));
    }
    return f;
}

} // namespace

TEST_SUITE_BEGIN("mpoly");

TEST_CASE("canonical rendering") {
    // 7/40*p1^5 - 1/4*p1*p4 + 1/5*p5
    MPoly f = MPoly::zero(5, "p");
    f.add_term({5, 0, 0, 0, 0}, Rat(7, 40));
    f.add_term({1, 0, 0, 1, 0}, Rat(-1, 4));
    f.add_term({0, 0, 0, 0, 1}, Rat(1, 5));
    CHECK(f.str() == "7/40*p1^5 - 1/4*p1*p4 + 1/5*p5");

    MPoly e2 = MPoly::zero(3, "x");
    e2.add_term({1, 1, 0}, Rat(1));
    e2.add_term({1, 0, 1}, Rat(1));
    e2.add_term({0, 1, 1}, Rat(1));
    CHECK(e2.str() == "x1*x2 + x1*x3 + x2*x3");

    CHECK(MPoly::zero(2, "x").str() == "0");
    CHECK(MPoly::constant(2, Rat(-3, 2), "x").str() == "-3/2");
    CHECK((xv(1, 2) - xv(2, 2)).str() == "x1 - x2");
    CHECK(xv(1, 1).pow(2).str() == "x1^2");
}

TEST_CASE("no zero coefficients stored") {
    MPoly f = xv(1) - xv(1);
    CHECK(f.is_zero());
    CHECK(f.term_count() == 0);
    MPoly g = (xv(1) + xv(2)) * (xv(1) - xv(2));
    CHECK(g.term_count() == 2); // x1^2 - x2^2, the cross terms cancel
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(12345);
    for (int iter = 0; iter < 60; ++iter) {
        const MPoly a = random_poly(rng, 3, 5, 4);
        const MPoly b = random_poly(rng, 3, 5, 4);
        const MPoly c = random_poly(rng, 3, 5, 4);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + MPoly::zero(3, "x") == a);
        CHECK(a * one_like(a) == a);
    }
}

TEST_CASE("partial derivatives") {
    // d(x1^2 x2)/dx1 = 2 x1 x2
    const MPoly f = xv(1).pow(2) * xv(2);
    CHECK(f.partial(1) == xv(1) * xv(2) + xv(1) * xv(2));
    // d(p1)/dx_i = 1
    const MPoly p1 = xv(1) + xv(2) + xv(3);
    CHECK(p1.partial(2) == MPoly::constant(3, Rat(1), "x"));
    // de2/dx1 at n=3 is x2 + x3
    MPoly e2 = xv(1) * xv(2) + xv(1) * xv(3) + xv(2) * xv(3);
    CHECK(e2.partial(1) == xv(2) + xv(3));
    CHECK_THROWS_AS(f.partial(0), std::out_of_range);
    CHECK_THROWS_AS(f.partial(4), std::out_of_range);
}

TEST_CASE("exact division") {
    const MPoly x1 = xv(1, 2), x2 = xv(2, 2);
    CHECK((x1.pow(2) - x2.pow(2)).divide_exact(x1 - x2) == x1 + x2);
    const MPoly f = x1.pow(3) * x2 + x1 - x2;
    CHECK(f.divide_exact(one_like(f)) == f);
    CHECK((x1.pow(2) * x2 + x1 * x2.pow(2)).divide_exact(x1 * x2) == x1 + x2);
    // geometric sum with positive coefficients
    const MPoly q = (x1.pow(3) - x2.pow(3)).divide_exact(x1 - x2);
    CHECK(q == x1.pow(2) + x1 * x2 + x2.pow(2));
    CHECK(q.coefficientwise_nonneg().nonneg);

    MPoly remainder;
    CHECK(!(x1.pow(2) + x2).try_divide_exact(x1 - x2, &remainder));
    CHECK(!remainder.is_zero());
    CHECK_THROWS_AS((x1.pow(2) + x2).divide_exact(x1 - x2), std::domain_error);
    CHECK_THROWS_AS(x1.divide_exact(MPoly::zero(2, "x")), std::domain_error);
}

TEST_CASE("divide_exact inverts multiplication") {
    std::mt19937_64 rng(777);
    int done = 0;
    while (done < 40) {
        const MPoly f = random_poly(rng, 2, 4, 3);
        const MPoly g = random_poly(rng, 2, 4, 3);
        if (g.is_zero()) continue;
        CHECK((f * g).divide_exact(g) == f);
        ++done;
    }
}

TEST_CASE("coefficientwise nonnegativity witness") {
    MPoly f = xv(1) + xv(2).scaled(Rat(2));
    CHECK(f.coefficientwise_nonneg().nonneg);
    MPoly g = xv(1) - xv(2);
    const auto rep = g.coefficientwise_nonneg();
    CHECK(!rep.nonneg);
    CHECK(rep.witness_coeff == Rat(-1));
    CHECK(rep.witness_exponents == Expvec{0, 1, 0});
    CHECK(MPoly::zero(2, "x").coefficientwise_nonneg().nonneg);
}

TEST_CASE("substitution and evaluation") {
    // f(p1, p2) = p1^2 - p2 under p1 -> x1+x2, p2 -> x1^2+x2^2 gives 2 x1 x2
    MPoly f = MPoly::zero(2, "p");
    f.add_term({2, 0}, Rat(1));
    f.add_term({0, 1}, Rat(-1));
    const MPoly x1 = xv(1, 2), x2 = xv(2, 2);
    std::vector<MPoly> images = {x1 + x2, x1.pow(2) + x2.pow(2)};
    CHECK(f.substitute(images) == (x1 * x2).scaled(Rat(2)));

    const std::vector<Rat> point = {Rat(3, 2), Rat(-1, 3)};
    CHECK((x1 * x2 + x2).evaluate(point) == Rat(3, 2) * Rat(-1, 3) + Rat(-1, 3));
    const std::vector<Rat> short_point = {Rat(1)};
    CHECK_THROWS_AS(f.evaluate(short_point), std::invalid_argument);
}

TEST_CASE("ring mismatch is rejected") {
    const MPoly a = MPoly::variable(2, 1, "x");
    const MPoly b = MPoly::variable(3, 1, "x");
    const MPoly c = MPoly::variable(2, 1, "p");
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * c, std::invalid_argument);
}

TEST_CASE("symmetry detection") {
    const MPoly e2 = xv(1) * xv(2) + xv(1) * xv(3) + xv(2) * xv(3);
    CHECK(e2.is_symmetric());
    CHECK(!(xv(1) * xv(2)).is_symmetric());
    CHECK(e2.swap_vars(1, 3) == e2);
}

TEST_CASE("degrees") {
    const MPoly f = xv(1).pow(2) * xv(2) + xv(3).pow(3);
    CHECK(f.total_degree() == 3);
    CHECK(f.homogeneous_degree() == 3);
    CHECK(!(xv(1) + xv(2).pow(2)).homogeneous_degree().has_value());
    // weighted: p-grading where variable m weighs m
    MPoly g = MPoly::zero(4, "p");
    g.add_term({1, 0, 0, 1}, Rat(1)); // p1 p4: weight 5
    g.add_term({5, 0, 0, 0}, Rat(1)); // p1^5: weight 5
    const std::vector<int> w = {1, 2, 3, 4};
    CHECK(g.homogeneous_degree(w) == 5);
}

TEST_SUITE_END();
