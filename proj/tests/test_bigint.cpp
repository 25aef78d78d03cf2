#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "supercong/bigint.hpp"

using supercong::BigInt;

TEST_CASE("construction and decimal round trip") {
    CHECK(BigInt().to_string() == "0");
    CHECK(BigInt(42).to_string() == "42");
    CHECK(BigInt(-999).to_string() == "-999");
    CHECK(BigInt("123456789012345678901234567890").to_string() ==
          "123456789012345678901234567890");
    CHECK(BigInt("-00123").to_string() == "-123");
    CHECK(BigInt("+7").to_string() == "7");
    CHECK_THROWS_AS(BigInt(""), std::invalid_argument);
    CHECK_THROWS_AS(BigInt("12x3"), std::invalid_argument);
    CHECK_THROWS_AS(BigInt("1/2"), std::invalid_argument);
}

TEST_CASE("sign and predicates") {
    CHECK(BigInt(0).sign() == 0);
    CHECK(BigInt(5).sign() == 1);
    CHECK(BigInt(-5).sign() == -1);
    CHECK(BigInt(0).is_zero());
    CHECK(BigInt(3).odd());
    CHECK(!BigInt(4).odd());
    CHECK(BigInt(0).bit_length() == 0);
    CHECK(BigInt(1).bit_length() == 1);
    CHECK(BigInt(255).bit_length() == 8);
}

TEST_CASE("arithmetic agrees with native on random int64 pairs") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        const std::int64_t a = static_cast<std::int32_t>(rng());
        const std::int64_t b = static_cast<std::int32_t>(rng());
        const BigInt A(a), B(b);
        CHECK((A + B).to_int64() == a + b);
        CHECK((A - B).to_int64() == a - b);
        CHECK((A * B).to_int64() == a * b);
        if (b != 0) {
            CHECK((A / B).to_int64() == a / b);   // truncated
            CHECK((A % B).to_int64() == a % b);
        }
    }
}

TEST_CASE("divmod identity and truncation signs") {
    BigInt q, r;
    BigInt::divmod(BigInt(17), BigInt(5), q, r);
    CHECK(q == BigInt(3));
    CHECK(r == BigInt(2));
    BigInt::divmod(BigInt(-17), BigInt(5), q, r);
    CHECK(q == BigInt(-3));
    CHECK(r == BigInt(-2));
    BigInt::divmod(BigInt(17), BigInt(-5), q, r);
    CHECK(q == BigInt(-3));
    CHECK(r == BigInt(2));
    CHECK_THROWS_AS(BigInt(1) / BigInt(0), std::domain_error);
}

TEST_CASE("big operands") {
    const BigInt a("123456789012345678901234567890");
    const BigInt b("987654321098765432109876543210");
    CHECK((a + b).to_string() == "1111111110111111111011111111100");
    CHECK((a * b) / a == b);
    CHECK(BigInt::pow(BigInt(2), 64).to_string() == "18446744073709551616");
    CHECK(BigInt::pow(BigInt(10), 30) == BigInt("1000000000000000000000000000000"));
}

TEST_CASE("gcd, lcm, divexact") {
    CHECK(BigInt::gcd(BigInt(12), BigInt(-8)) == BigInt(4));
    CHECK(BigInt::gcd(BigInt(0), BigInt(5)) == BigInt(5));
    CHECK(BigInt::lcm(BigInt(4), BigInt(6)) == BigInt(12));
    CHECK(BigInt::divexact(BigInt(84), BigInt(-7)) == BigInt(-12));
    CHECK_THROWS_AS(BigInt::divexact(BigInt(5), BigInt(2)), std::domain_error);
    const BigInt a("123456789012345678901234567890");
    const BigInt g = BigInt::gcd(a * BigInt(6), a * BigInt(4));
    CHECK(g == a * BigInt(2));
}

TEST_CASE("mod_u64 is the mathematical remainder") {
    CHECK(BigInt(17).mod_u64(5) == 2);
    CHECK(BigInt(-17).mod_u64(5) == 3);
    CHECK(BigInt(-5).mod_u64(5) == 0);
    CHECK(BigInt("-123456789012345678901").mod_u64(97) ==
          (97 - BigInt("123456789012345678901").mod_u64(97)) % 97);
}

TEST_CASE("int64 bounds") {
    CHECK(BigInt(INT64_MAX).to_int64() == INT64_MAX);
    CHECK(BigInt(INT64_MIN).to_int64() == INT64_MIN);
    CHECK(!(BigInt(INT64_MAX) + BigInt(1)).fits_int64());
    CHECK_THROWS_AS((BigInt(INT64_MAX) + BigInt(1)).to_int64(), std::overflow_error);
}
