#include "supercong/padic.hpp"

#include <string>

namespace supercong {

PadicParam decompose(const Rational& a, std::uint32_t p) {
    PadicParam out;
    out.a = a;
    out.p = p;
    out.frac = static_cast<std::uint32_t>(reduce(a, p, 1).value());
    out.t = (a - Rational(static_cast<std::int64_t>(out.frac), 1)) / Rational(static_cast<std::int64_t>(p), 1);
    return out;
}

Residue fermat_quotient(std::int64_t c, std::uint32_t p) {
    const std::uint64_t p2 = static_cast<std::uint64_t>(p) * p;
    const std::uint64_t cm = BigInt(c).mod_u64(p2);
    if (cm % p == 0)
        throw BaseDivisibleByP("fermat_quotient: base " + std::to_string(c) +
                               " divisible by p = " + std::to_string(p));
    const std::uint64_t v = pow_mod_u64(cm, p - 1, p2);
    // v == 1 (mod p) by Fermat, so v-1 divides by p exactly.
    return Residue(((v - 1) / p) % p, p, 1);
}

Rational fermat_quotient_exact(std::int64_t c, std::uint32_t p) {
    if (BigInt(c).mod_u64(p) == 0)
        throw BaseDivisibleByP("fermat_quotient: base " + std::to_string(c) +
                               " divisible by p = " + std::to_string(p));
    BigInt v = BigInt::pow(BigInt(c), p - 1);
    v -= BigInt(1);
    return Rational(BigInt::divexact(v, BigInt(static_cast<std::int64_t>(p))));
}

Rational harmonic_sum(std::uint32_t n) {
    Rational h;
    for (std::uint32_t m = 1; m <= n; ++m) h += Rational(1, static_cast<std::int64_t>(m));
    return h;
}

Residue harmonic(std::uint32_t n, std::uint32_t p, std::uint32_t k) {
    if (p <= n)
        throw TermDivisibleByP("harmonic: term 1/" + std::to_string(p) + " has p | m, p = " +
                               std::to_string(p));
    return reduce(harmonic_sum(n), p, k);
}

}  // namespace supercong
