#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "supercong/binomial_sums.hpp"
#include "supercong/padic.hpp"
#include "supercong/primes.hpp"

using namespace supercong;

namespace {

// Independent oracle: fresh binom(a, k) per term, no incremental state.
Rational naive_pair_sum(const Rational& a, std::uint32_t p, WeightKind w, bool half) {
    const std::uint32_t kmax = half ? (p - 1) / 2 : p - 1;
    Rational acc;
    for (std::uint32_t k = (w == WeightKind::InvK ? 1 : 0); k <= kmax; ++k) {
        Rational weight;
        switch (w) {
            case WeightKind::One: weight = Rational(1); break;
            case WeightKind::K: weight = Rational(static_cast<std::int64_t>(k)); break;
            case WeightKind::InvK: weight = Rational(1, k); break;
            case WeightKind::Inv2kPlus1: weight = Rational(1, 2 * static_cast<std::int64_t>(k) + 1); break;
            case WeightKind::Inv2kMinus1: weight = Rational(1, 2 * static_cast<std::int64_t>(k) - 1); break;
        }
        acc += weight * binom(a, k) * binom(-Rational(1) - a, k);
    }
    return acc;
}

Rational rnd_rational(std::mt19937_64& rng) {
    const std::int64_t n = static_cast<std::int64_t>(rng() % 81) - 40;
    const std::int64_t d = 1 + static_cast<std::int64_t>(rng() % 12);
    return Rational(n, d);
}

const Rational kCanonical[] = {Rational(-1, 2), Rational(-1, 3), Rational(-2, 3), Rational(-1, 4),
                               Rational(-3, 4), Rational(-1, 6), Rational(-5, 6)};

}  // namespace

TEST_CASE("binom point values") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 10; ++i) CHECK(binom(rnd_rational(rng), 0) == Rational(1));
    CHECK(binom(Rational(-1, 2), 2) == Rational(3, 8));
    CHECK(binom(Rational(5), 7).is_zero());
    CHECK(binom(Rational(5), 3) == Rational(10));
    CHECK(binom(Rational(-1, 4), 3) == Rational(-15, 128));
    CHECK(binom_int(4, 2) == BigInt(6));
    CHECK(binom_int(0, 0) == BigInt(1));
    CHECK(binom_int(3, 5) == BigInt(0));
}

TEST_CASE("pascal recurrence at rational arguments") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 30; ++i) {
        const Rational a = rnd_rational(rng);
        for (std::uint64_t k = 1; k <= 30; ++k)
            CHECK(binom(a, k) == binom(a - Rational(1), k) + binom(a - Rational(1), k - 1));
    }
}

TEST_CASE("central forms equal the rational binomial pairs exactly") {
    const std::pair<CentralFamily, Rational> fam[] = {
        {CentralFamily::F16, Rational(-1, 2)},
        {CentralFamily::F27, Rational(-1, 3)},
        {CentralFamily::F64, Rational(-1, 4)},
        {CentralFamily::F432, Rational(-1, 6)},
    };
    for (const auto& [family, a] : fam)
        for (std::uint64_t k = 0; k <= 50; ++k)
            CHECK(central_form(family, k) == binom(a, k) * binom(-Rational(1) - a, k));
}

TEST_CASE("central form point values") {
    CHECK(central_form(CentralFamily::F64, 1) == Rational(3, 16));
    for (auto f : {CentralFamily::F16, CentralFamily::F27, CentralFamily::F64, CentralFamily::F432})
        CHECK(central_form(f, 0) == Rational(1));
    CHECK(central_form(CentralFamily::F432, 2) == Rational(385, 5184));
}

TEST_CASE("pair_sum frozen residues at p = 5, a = -1/4") {
    const Rational a(-1, 4);
    CHECK(reduce(pair_sum(a, 5, WeightKind::One, true), 5, 2).value() == 4);
    CHECK(reduce(pair_sum(a, 5, WeightKind::Inv2kMinus1, true), 5, 2).value() == 22);
    CHECK(reduce(pair_sum(a, 5, WeightKind::InvK, true), 5, 2).value() == 18);
}

TEST_CASE("pair_sum equals the naive oracle") {
    std::mt19937_64 rng(11);
    for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
        std::vector<Rational> params(std::begin(kCanonical), std::end(kCanonical));
        for (int i = 0; i < 3; ++i) {
            Rational a = rnd_rational(rng);
            while (a.den().mod_u64(p) == 0) a = rnd_rational(rng);
            params.push_back(a);
        }
        for (const Rational& a : params)
            for (auto w : {WeightKind::One, WeightKind::K, WeightKind::InvK,
                           WeightKind::Inv2kPlus1, WeightKind::Inv2kMinus1})
                for (bool half : {true, false})
                    CHECK(pair_sum(a, p, w, half) == naive_pair_sum(a, p, w, half));
    }
}

TEST_CASE("signed_alt_sum values") {
    CHECK(signed_alt_sum(Rational(), 7).is_zero());
    CHECK(signed_alt_sum(Rational(1), 7) == Rational(1));
    CHECK(signed_alt_sum(Rational(-1, 4), 5) == Rational(-3203, 8192));
    // independent: term-by-term with fresh binomials
    std::mt19937_64 rng(13);
    for (std::uint32_t p : {5u, 11u}) {
        for (int i = 0; i < 5; ++i) {
            const Rational a = rnd_rational(rng);
            Rational acc;
            for (std::uint32_t k = 1; k <= p - 1; ++k) {
                const Rational t = binom(a, k) / Rational(static_cast<std::int64_t>(k));
                acc += (k % 2 == 1) ? t : -t;
            }
            CHECK(signed_alt_sum(a, p) == acc);
        }
    }
}

TEST_CASE("neg2_sum values") {
    CHECK(neg2_sum(Rational(), 7) == Rational(1));
    CHECK(neg2_sum(Rational(1), 7) == Rational(-1));
    CHECK(neg2_sum(Rational(-1, 4), 5) == Rational(587, 128));
    CHECK(neg2_sum(Rational(-1, 2), 5) == Rational(83, 8));
    std::mt19937_64 rng(17);
    for (std::uint32_t p : {5u, 11u}) {
        for (int i = 0; i < 5; ++i) {
            const Rational b = rnd_rational(rng);
            Rational acc;
            for (std::uint32_t k = 0; k <= p - 1; ++k)
                acc += binom(b, k) * Rational(-2).pow(k);
            CHECK(neg2_sum(b, p) == acc);
        }
    }
}

TEST_CASE("residue-native path equals exact-then-reduce") {
    for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
        for (const Rational& a : kCanonical) {
            for (std::uint32_t k = 1; k <= 3; ++k) {
                for (auto w : {WeightKind::One, WeightKind::K, WeightKind::InvK,
                               WeightKind::Inv2kMinus1})
                    for (bool half : {true, false})
                        CHECK(pair_sum_mod(a, p, k, w, half) == reduce(pair_sum(a, p, w, half), p, k));
                // the 1/(2k+1) shapes appear in the congruences with a
                // (2a+1) factor; compare under the same scaling
                const Rational two_a1 = Rational(2) * a + Rational(1);
                for (bool half : {true, false})
                    CHECK(pair_sum_mod(a, p, k, WeightKind::Inv2kPlus1, half, two_a1) ==
                          reduce(two_a1 * pair_sum(a, p, WeightKind::Inv2kPlus1, half), p, k));
                CHECK(signed_alt_sum_mod(a, p, k) == reduce(signed_alt_sum(a, p), p, k));
                CHECK(neg2_sum_mod(a, p, k) == reduce(neg2_sum(a, p), p, k));
                const Rational a2 = Rational(2) * a;
                CHECK(neg2_sum_mod(a2, p, k) == reduce(neg2_sum(a2, p), p, k));
            }
        }
    }
}

TEST_CASE("both paths reject non-p-integral sums the same way") {
    // unscaled 1/(2k+1) weight at <a>_p = (p-1)/2: the k = (p-1)/2 term
    // carries exactly 1/p on both routes
    for (std::uint32_t p : {5u, 13u}) {
        const Rational a(-1, 2);
        CHECK_THROWS_AS(reduce(pair_sum(a, p, WeightKind::Inv2kPlus1, true), p, 2),
                        DenominatorDivisibleByP);
        CHECK_THROWS_AS(pair_sum_mod(a, p, 2, WeightKind::Inv2kPlus1, true),
                        DenominatorDivisibleByP);
    }
}

TEST_CASE("identity: first-difference of the 1/k pair sum") {
    // S_n(a) - S_n(a-1) = (2/a)(C(a-1,n)C(-a-1,n) - 1)
    std::mt19937_64 rng(19);
    auto s_n = [](const Rational& a, std::uint32_t n) {
        Rational acc;
        for (std::uint32_t k = 1; k <= n; ++k)
            acc += binom(a, k) * binom(-Rational(1) - a, k) / Rational(static_cast<std::int64_t>(k));
        return acc;
    };
    int done = 0;
    while (done < 50) {
        const Rational a = rnd_rational(rng);
        if (a.is_zero()) continue;
        ++done;
        for (std::uint32_t n = 1; n <= 15; ++n) {
            const Rational lhs = s_n(a, n) - s_n(a - Rational(1), n);
            const Rational rhs = Rational(2) / a *
                                 (binom(a - Rational(1), n) * binom(-a - Rational(1), n) - Rational(1));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("identity: telescoped tail of the 1/k pair sum") {
    // S_n(x + m) - S_n(x) = sum_{r=1..m} (2/(x+r))(C(x+r-1,n)C(-x-r-1,n) - 1)
    std::mt19937_64 rng(23);
    auto s_n = [](const Rational& a, std::uint32_t n) {
        Rational acc;
        for (std::uint32_t k = 1; k <= n; ++k)
            acc += binom(a, k) * binom(-Rational(1) - a, k) / Rational(static_cast<std::int64_t>(k));
        return acc;
    };
    int done = 0;
    while (done < 25) {
        const std::uint32_t p = 5 + 2 * static_cast<std::uint32_t>(rng() % 5);
        const Rational t = rnd_rational(rng);
        const std::uint32_t m = static_cast<std::uint32_t>(rng() % 11);
        const Rational x = Rational(static_cast<std::int64_t>(p)) * t;
        bool pole = false;
        for (std::uint32_t r = 1; r <= m; ++r)
            if ((x + Rational(static_cast<std::int64_t>(r))).is_zero()) pole = true;
        if (pole) continue;
        ++done;
        for (std::uint32_t n = 1; n <= 15; ++n) {
            Rational rhs;
            for (std::uint32_t r = 1; r <= m; ++r) {
                const Rational xr = x + Rational(static_cast<std::int64_t>(r));
                rhs += Rational(2) / xr *
                       (binom(xr - Rational(1), n) * binom(-xr - Rational(1), n) - Rational(1));
            }
            CHECK(s_n(x + Rational(static_cast<std::int64_t>(m)), n) - s_n(x, n) == rhs);
        }
    }
}

TEST_CASE("identity: quadratic-weight closed form") {
    // sum_{k=0..n} C(a,k)C(-1-a,k) ((2a(a+1)+1)k - a(a+1))/(4k^2-1)
    //   = (a(a+n+1)/(2n+1)) C(a-1,n)C(-a-1,n)
    std::mt19937_64 rng(29);
    for (int i = 0; i < 50; ++i) {
        const Rational a = rnd_rational(rng);
        const Rational aa1 = a * (a + Rational(1));
        for (std::uint32_t n = 0; n <= 15; ++n) {
            Rational lhs;
            for (std::uint32_t k = 0; k <= n; ++k) {
                const Rational kq(static_cast<std::int64_t>(k));
                lhs += binom(a, k) * binom(-Rational(1) - a, k) *
                       ((Rational(2) * aa1 + Rational(1)) * kq - aa1) /
                       (Rational(4) * kq * kq - Rational(1));
            }
            const Rational rhs = a * (a + Rational(static_cast<std::int64_t>(n) + 1)) /
                                 Rational(2 * static_cast<std::int64_t>(n) + 1) *
                                 binom(a - Rational(1), n) * binom(-a - Rational(1), n);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("identity: k-weight closed form") {
    // sum_{k=0..n} (k - a(a+1)) C(a,k)C(-1-a,k) = -a(a+n+1) C(a-1,n)C(-1-a,n)
    std::mt19937_64 rng(31);
    for (int i = 0; i < 50; ++i) {
        const Rational a = rnd_rational(rng);
        const Rational aa1 = a * (a + Rational(1));
        for (std::uint32_t n = 0; n <= 15; ++n) {
            Rational lhs;
            for (std::uint32_t k = 0; k <= n; ++k)
                lhs += (Rational(static_cast<std::int64_t>(k)) - aa1) * binom(a, k) *
                       binom(-Rational(1) - a, k);
            const Rational rhs = -a * (a + Rational(static_cast<std::int64_t>(n) + 1)) *
                                 binom(a - Rational(1), n) * binom(-Rational(1) - a, n);
            CHECK(lhs == rhs);
        }
    }
}
