#include <doctest.h>

#include <random>

#include "qweb/scalar.hpp"

using namespace qweb;

namespace {
Scalar rnd(std::mt19937& g) {
    std::uniform_int_distribution<int> d(-5, 5), q(1, 4);
    return Scalar(Rational(d(g), q(g)), Rational(d(g), q(g)), Rational(d(g), q(g)), Rational(d(g), q(g)));
}
} // namespace

TEST_CASE("scalar arithmetic") {
    Scalar i = Scalar::i(), r2 = Scalar::sqrt2();
    CHECK(i * i == Scalar(-1));
    CHECK(r2 * r2 == Scalar(2));
    CHECK((Scalar(1) + i) * (Scalar(1) - i) == Scalar(2));
    CHECK((Scalar(1) + i) + (Scalar(1) - i) == Scalar(2));
    CHECK(i * r2 == r2 * i);
    CHECK(Scalar(2).inv() == Scalar(Rational(1, 2)));
    CHECK(i.inv() == -i);
    CHECK_THROWS_AS(Scalar().inv(), DivisionByZero);
}

TEST_CASE("scalar text") {
    CHECK(Scalar::parse("1/2 + 3*i") == Scalar(Rational(1, 2), 3, 0, 0));
    CHECK(Scalar::parse("0").is_zero());
    CHECK(Scalar::parse("1*r2") == Scalar::sqrt2());
    CHECK(Scalar(Rational(1, 2), 3, 0, 0).str() == "1/2 + 3*i");
    CHECK(Scalar().str() == "0");
    CHECK(Scalar::sqrt2().str() == "1*r2");
    CHECK((-Scalar::i()).str() == "-1*i");
    CHECK(Scalar::parse("-2/4 + -1*i*r2").str() == "-1/2 + -1*i*r2");
    CHECK_THROWS_AS(Scalar::parse("1 +"), ParseError);
    CHECK_THROWS_AS(Scalar::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Scalar::parse("2*j"), ParseError);
}

TEST_CASE("field axioms on random scalars") {
    std::mt19937 g(7);
    for (int t = 0; t < 300; ++t) {
        Scalar a = rnd(g), b = rnd(g), c = rnd(g);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK(Scalar::parse(a.str()) == a);
    }
    for (int t = 0; t < 10000; ++t) {
        Scalar a = rnd(g);
        if (a.is_zero()) continue;
        Scalar inv = a.inv();
        REQUIRE(a * inv == Scalar(1));
        REQUIRE(inv * a == Scalar(1));
    }
}

TEST_CASE("rational overflow promotes to big") {
    Rational big(1);
    for (int i = 0; i < 40; ++i) big = big * Rational(1000003);
    CHECK(big.is_big());
    Rational back = big;
    for (int i = 0; i < 40; ++i) back = back / Rational(1000003);
    CHECK(back == Rational(1));
    CHECK(Rational::parse(big.str()) == big);
}
