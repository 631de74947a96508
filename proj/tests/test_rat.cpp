#include "symnorm/rat.hpp"

#include <doctest.h>

using namespace symnorm;

TEST_SUITE_BEGIN("rat");

TEST_CASE("lowest terms and positive denominator") {
    Rat a(6, 4);
    CHECK(a.numerator() == 3);
    CHECK(a.denominator() == 2);
    Rat b(5, -10);
    CHECK(b.numerator() == -1);
    CHECK(b.denominator() == 2);
    CHECK(Rat(0, 7) == Rat());
    CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
}

TEST_CASE("arithmetic is exact") {
    Rat a(1, 3), b(1, 6);
    CHECK(a + b == Rat(1, 2));
    CHECK(a - b == Rat(1, 6));
    CHECK(a * b == Rat(1, 18));
    CHECK(a / b == Rat(2));
    CHECK(-a == Rat(-1, 3));
    CHECK_THROWS_AS(a / Rat(), std::domain_error);

    // no drift over many operations
    Rat acc;
    for (int i = 1; i <= 200; ++i) acc += Rat(1, i) - Rat(1, i);
    CHECK(acc.is_zero());
}

TEST_CASE("parse and render") {
    CHECK(Rat::parse("7/40") == Rat(7, 40));
    CHECK(Rat::parse("-1/4") == Rat(-1, 4));
    CHECK(Rat::parse("3") == Rat(3));
    CHECK(Rat::parse("6/4") == Rat(3, 2));
    CHECK(Rat(7, 40).str() == "7/40");
    CHECK(Rat(-1, 4).str() == "-1/4");
    CHECK(Rat(3).str() == "3");
    CHECK(Rat().str() == "0");
    CHECK_THROWS_AS(Rat::parse("x"), std::domain_error);
    CHECK_THROWS_AS(Rat::parse("1/0"), std::domain_error);
}

TEST_CASE("pow and factorial") {
    CHECK(Rat(2, 3).pow(3) == Rat(8, 27));
    CHECK(Rat(5).pow(0) == Rat(1));
    CHECK(Rat::factorial(0) == Rat(1));
    CHECK(Rat::factorial(5) == Rat(120));
    CHECK(Rat::factorial(12) == Rat(479001600));
}

TEST_CASE("from_double is the exact binary rational") {
    CHECK(Rat::from_double(0.5) == Rat(1, 2));
    CHECK(Rat::from_double(0.25) == Rat(1, 4));
    CHECK(Rat::from_double(3.0) == Rat(3));
    // 0.1 is not exactly 1/10 in binary; the conversion must preserve the bits
    const Rat tenth = Rat::from_double(0.1);
    CHECK(tenth != Rat(1, 10));
    CHECK(tenth.to_double() == 0.1);
}

TEST_CASE("ordering") {
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(Rat(-1, 2) < Rat(0));
    CHECK(Rat(2, 4) <= Rat(1, 2));
    CHECK(Rat(7, 40).sign() == 1);
    CHECK(Rat(-7, 40).sign() == -1);
    CHECK(Rat().sign() == 0);
}

TEST_SUITE_END();
