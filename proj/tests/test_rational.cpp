#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "supercong/rational.hpp"

using supercong::BigInt;
using supercong::Rational;

TEST_CASE("normalization on construction") {
    CHECK(Rational(6, 8) == Rational(3, 4));
    CHECK(Rational(6, 8).num() == BigInt(3));
    CHECK(Rational(6, 8).den() == BigInt(4));
    CHECK(Rational(3, -4).num() == BigInt(-3));
    CHECK(Rational(3, -4).den() == BigInt(4));
    CHECK(Rational(0, 7).den() == BigInt(1));  // canonical zero is 0/1
    CHECK(Rational().is_zero());
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("parse and to_string") {
    CHECK(Rational::parse("-1/2") == Rational(-1, 2));
    CHECK(Rational::parse("42") == Rational(42));
    CHECK(Rational::parse("+3/6") == Rational(1, 2));
    CHECK(Rational(-7, 3).to_string() == "-7/3");
    CHECK(Rational(5).to_string() == "5");
    CHECK(Rational::parse("123456789012345678901/2").num() ==
          BigInt("123456789012345678901"));
    CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
}

TEST_CASE("field arithmetic") {
    const Rational a(1, 2), b(1, 3);
    CHECK(a + b == Rational(5, 6));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 6));
    CHECK(a / b == Rational(3, 2));
    CHECK(-a == Rational(-1, 2));
    CHECK_THROWS_AS(a / Rational(), std::domain_error);
    CHECK(Rational(2, 3).inverse() == Rational(3, 2));
    CHECK_THROWS_AS(Rational().inverse(), std::domain_error);
}

TEST_CASE("pow with negative exponents") {
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(0) == Rational(1));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(-1, 2).pow(2) == Rational(1, 4));
    CHECK(Rational(-1, 2).pow(3) == Rational(-1, 8));
    CHECK(Rational().pow(5) == Rational());
    CHECK_THROWS_AS(Rational().pow(-1), std::domain_error);
}

TEST_CASE("ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-3, 4) < Rational(-1, 4));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(7, 2) > Rational(3));
}

TEST_CASE("random field identities") {
    std::mt19937_64 rng(11);
    auto rnd = [&]() {
        std::int64_t n = static_cast<std::int64_t>(rng() % 2001) - 1000;
        std::int64_t d = 1 + static_cast<std::int64_t>(rng() % 50);
        return Rational(n, d);
    };
    for (int i = 0; i < 500; ++i) {
        const Rational a = rnd(), b = rnd(), c = rnd();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) CHECK((a / b) * b == a);
        CHECK(supercong::BigInt::gcd(a.num(), a.den()) == supercong::BigInt(1));
        CHECK(a.den().sign() == 1);
    }
}
