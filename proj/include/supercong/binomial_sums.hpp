#ifndef SUPERCONG_BINOMIAL_SUMS_HPP
#define SUPERCONG_BINOMIAL_SUMS_HPP

#include <cstdint>

#include "supercong/modular.hpp"
#include "supercong/rational.hpp"

namespace supercong {

/// Per-term weights for the binomial-pair sums. InvK sums from k = 1;
/// Inv2kMinus1 includes k = 0 with weight -1; the rest start at k = 0.
enum class WeightKind { One, K, InvK, Inv2kPlus1, Inv2kMinus1 };

/// Generalized binomial coefficient a(a-1)...(a-k+1)/k! for rational a.
Rational binom(const Rational& a, std::uint64_t k);

/// Integer binomial C(n, r).
BigInt binom_int(std::uint64_t n, std::uint64_t r);

/// sum over k of w(k) * C(a,k) * C(-1-a,k); the range is k = 0..(p-1)/2
/// when half, else k = 0..p-1 (from k = 1 for InvK).
Rational pair_sum(const Rational& a, std::uint32_t p, WeightKind weight, bool half);

/// sum_{k=1..p-1} (-1)^{k-1} C(a,k) / k.
Rational signed_alt_sum(const Rational& a, std::uint32_t p);

/// sum_{k=0..p-1} C(b,k) (-2)^k.
Rational neg2_sum(const Rational& b, std::uint32_t p);

/// The four central binomial families of products C(a,k)C(-1-a,k):
///   16:  C(2k,k)^2 / 16^k          (a = -1/2)
///   27:  C(2k,k)C(3k,k) / 27^k     (a = -1/3)
///   64:  C(2k,k)C(4k,2k) / 64^k    (a = -1/4)
///   432: C(3k,k)C(6k,3k) / 432^k   (a = -1/6)
enum class CentralFamily { F16 = 16, F27 = 27, F64 = 64, F432 = 432 };

Rational central_form(CentralFamily family, std::uint64_t k);

/// Weighted sum of central_form terms with pair_sum's range conventions.
Rational central_sum(CentralFamily family, std::uint32_t p, WeightKind weight, bool half);

// Residue-native fast path: terms are reduced mod p^k as they are
// produced, tracking the exact power of p carried by each partial
// product so that p-divisible weights (e.g. 1/(2k+1) at k = (p-1)/2)
// stay sound. Exists as a cross-check oracle for the exact path.
// `scale` multiplies every term; the congruences with 1/(2k+1) weights
// carry a (2a+1) factor whose p-valuation cancels the weight's pole,
// and it must cancel inside the modular product to stay representable.
Residue pair_sum_mod(const Rational& a, std::uint32_t p, std::uint32_t k, WeightKind weight,
                     bool half, const Rational& scale = Rational(1));
Residue signed_alt_sum_mod(const Rational& a, std::uint32_t p, std::uint32_t k);
Residue neg2_sum_mod(const Rational& b, std::uint32_t p, std::uint32_t k);

}  // namespace supercong

#endif
