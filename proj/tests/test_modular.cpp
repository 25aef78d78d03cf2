#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "supercong/modular.hpp"
#include "supercong/padic.hpp"
#include "supercong/primes.hpp"

using namespace supercong;

TEST_CASE("reduce examples") {
    CHECK(reduce(Rational(3, 16), 5, 2).value() == 8);  // 16 * 11 == 1 (mod 25)
    CHECK(reduce(Rational(), 7, 3).value() == 0);
    CHECK_THROWS_AS(reduce(Rational(1, 5), 5, 2), DenominatorDivisibleByP);
    CHECK(reduce(Rational(-1), 5, 2).value() == 24);
    CHECK(reduce(Rational(-797, 1024), 5, 2).value() == 22);
}

TEST_CASE("reduce validates p and k") {
    CHECK_THROWS_AS(reduce(Rational(1), 4, 1), std::invalid_argument);
    CHECK_THROWS_AS(reduce(Rational(1), 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(reduce(Rational(1), 7, 4), std::invalid_argument);
    CHECK_THROWS_AS(reduce(Rational(1), 7, 0), std::invalid_argument);
}

TEST_CASE("residue ring operations") {
    const Residue x(8, 5, 2), y(11, 5, 2);
    CHECK((x * y).value() == 13);  // 88 mod 25
    CHECK((x + y).value() == 19);
    CHECK((x - y).value() == 22);
    CHECK((x / x).value() == 1);
    CHECK(Residue(2, 5, 2).pow(4).value() == 16);
    CHECK((-Residue(1, 5, 2)).value() == 24);
    CHECK(Residue(2, 5, 2).pow(0).value() == 1);
}

TEST_CASE("division by a unit only") {
    const Residue x(3, 5, 2);
    CHECK_THROWS_AS(x / Residue(10, 5, 2), NonUnitDivisor);
    CHECK_THROWS_AS(x / Residue(0, 5, 2), NonUnitDivisor);
    for (std::uint64_t u = 1; u < 25; ++u) {
        if (u % 5 == 0) continue;
        CHECK((Residue(u, 5, 2) / Residue(u, 5, 2)).value() == 1);
    }
}

TEST_CASE("cross-modulus arithmetic is rejected") {
    CHECK_THROWS_AS(Residue(1, 5, 2) + Residue(1, 5, 1), ModulusMismatch);
    CHECK_THROWS_AS(Residue(1, 5, 2) * Residue(1, 7, 2), ModulusMismatch);
    CHECK(Residue(1, 5, 2) != Residue(1, 5, 1));
}

TEST_CASE("reduce is a ring homomorphism on random p-integral pairs") {
    std::mt19937_64 rng(23);
    for (std::uint32_t p : {5u, 13u, 199u}) {
        auto rnd = [&]() {
            while (true) {
                std::int64_t n = static_cast<std::int64_t>(rng() % 40001) - 20000;
                std::int64_t d = 1 + static_cast<std::int64_t>(rng() % 600);
                if (d % p == 0) continue;
                Rational q(n, d);
                if (q.den().mod_u64(p) != 0) return q;
            }
        };
        for (std::uint32_t k = 1; k <= 3; ++k) {
            for (int i = 0; i < 3400; ++i) {
                const Rational x = rnd(), y = rnd();
                CHECK(reduce(x + y, p, k) == reduce(x, p, k) + reduce(y, p, k));
                CHECK(reduce(x * y, p, k) == reduce(x, p, k) * reduce(y, p, k));
            }
        }
    }
}

TEST_CASE("decompose examples") {
    const PadicParam d1 = decompose(Rational(-1, 4), 5);
    CHECK(d1.frac == 1);
    CHECK(d1.t == Rational(-1, 4));
    const PadicParam d2 = decompose(Rational(-1, 3), 7);
    CHECK(d2.frac == 2);
    CHECK(d2.t == Rational(-1, 3));
    const PadicParam d3 = decompose(Rational(3), 7);
    CHECK(d3.frac == 3);
    CHECK(d3.t.is_zero());
    CHECK_THROWS_AS(decompose(Rational(1, 5), 5), DenominatorDivisibleByP);
}

TEST_CASE("decompose round trip on random inputs") {
    std::mt19937_64 rng(31);
    for (std::uint32_t p : {5u, 7u, 61u, 199u}) {
        for (int i = 0; i < 400; ++i) {
            std::int64_t n = static_cast<std::int64_t>(rng() % 20001) - 10000;
            std::int64_t d = 1 + static_cast<std::int64_t>(rng() % 60);
            if (d % p == 0) continue;
            const Rational a(n, d);
            if (a.den().mod_u64(p) == 0) continue;
            const PadicParam pd = decompose(a, p);
            CHECK(pd.frac < p);
            CHECK(Rational(static_cast<long long>(pd.frac)) +
                      Rational(static_cast<long long>(p)) * pd.t ==
                  a);
            // a == frac (mod p) in the numerator sense
            const BigInt lhs = a.num() - BigInt(static_cast<long long>(pd.frac)) * a.den();
            CHECK(lhs.mod_u64(p) == 0);
        }
    }
}

TEST_CASE("fermat quotient examples") {
    CHECK(fermat_quotient(2, 5).value() == 3);   // (16-1)/5
    CHECK(fermat_quotient(2, 7).value() == 2);   // 9 mod 7
    for (std::uint32_t p : {5u, 7u, 11u, 97u}) CHECK(fermat_quotient(1, p).value() == 0);
    CHECK_THROWS_AS(fermat_quotient(10, 5), BaseDivisibleByP);
    CHECK_THROWS_AS(fermat_quotient(-7, 7), BaseDivisibleByP);
    // negative bases reduce first
    CHECK(fermat_quotient(-3, 5).value() == fermat_quotient(22, 5).value());
}

TEST_CASE("exact fermat quotient matches the mod-p path") {
    for (std::uint32_t p : {5u, 7u, 31u, 199u}) {
        for (int c : {2, 3, 6, 10}) {
            if (static_cast<std::uint32_t>(c) % p == 0) continue;
            CHECK(reduce(fermat_quotient_exact(c, p), p, 1) == fermat_quotient(c, p));
        }
    }
    CHECK_THROWS_AS(fermat_quotient_exact(10, 5), BaseDivisibleByP);
    CHECK(fermat_quotient_exact(2, 5) == Rational(3));
    CHECK(fermat_quotient_exact(3, 5) == Rational(16));
}

TEST_CASE("harmonic examples") {
    for (std::uint32_t p : {5u, 7u, 11u}) CHECK(harmonic(0, p, 2).value() == 0);
    CHECK(harmonic(2, 5, 1).value() == 4);  // 3/2 == 3*3 == 4 (mod 5)
    CHECK(harmonic(1, 7, 2).value() == 1);
    CHECK_THROWS_AS(harmonic(5, 5, 1), TermDivisibleByP);
    CHECK_THROWS_AS(harmonic(12, 5, 2), TermDivisibleByP);
}

TEST_CASE("harmonic links to the fermat quotient of 2") {
    // H_{(p-1)/2} == -2 q_p(2) and H_{[p/4]} == -3 q_p(2) (mod p)
    for (std::uint32_t p : primes_in_range(5, 61)) {
        const Residue q2 = fermat_quotient(2, p);
        const Residue m2 = Residue(2, p, 1) * q2;
        const Residue m3 = Residue(3, p, 1) * q2;
        CHECK(harmonic((p - 1) / 2, p, 1) == -m2);
        CHECK(harmonic(p / 4, p, 1) == -m3);
    }
}

TEST_CASE("wolstenholme on a unit-test range") {
    for (std::uint32_t p : primes_in_range(5, 61)) {
        CHECK(harmonic(p - 1, p, 2).value() == 0);
        Rational sq;
        for (std::uint32_t m = 1; m <= (p - 1) / 2; ++m)
            sq += Rational(1, static_cast<std::int64_t>(m) * m);
        CHECK(reduce(sq, p, 1).value() == 0);
    }
}

TEST_CASE("prime guard") {
    CHECK(is_prime(2));
    CHECK(is_prime(199));
    CHECK(!is_prime(1));
    CHECK(!is_prime(0));
    CHECK(!is_prime(9));
    CHECK(!is_prime(91));  // 7*13
    CHECK(primes_in_range(5, 20) == std::vector<std::uint32_t>{5, 7, 11, 13, 17, 19});
    CHECK(primes_in_range(5, 199).size() == 44);
}
