#ifndef SUPERCONG_PADIC_HPP
#define SUPERCONG_PADIC_HPP

#include <cstdint>

#include "supercong/modular.hpp"
#include "supercong/rational.hpp"

namespace supercong {

/// The decomposition a = frac + p*t of a p-integral rational, where
/// frac is the unique representative of a mod p in [0, p-1] and
/// t = (a - frac)/p is the exact rational tail.
struct PadicParam {
    Rational a;
    std::uint32_t p = 0;
    std::uint32_t frac = 0;
    Rational t;
};

/// Throws DenominatorDivisibleByP when p | den(a).
PadicParam decompose(const Rational& a, std::uint32_t p);

/// (c^{p-1} - 1)/p mod p, computed via exponentiation mod p^2 followed by
/// exact division by p. Throws BaseDivisibleByP when p | c.
Residue fermat_quotient(std::int64_t c, std::uint32_t p);

/// Exact integer (c^{p-1} - 1)/p, for right-hand sides that need the
/// quotient modulo higher powers of p.
Rational fermat_quotient_exact(std::int64_t c, std::uint32_t p);

/// Exact H_n = sum_{m=1..n} 1/m, with H_0 = 0.
Rational harmonic_sum(std::uint32_t n);

/// reduce(H_n, p, k). Throws TermDivisibleByP when some m <= n has p | m.
Residue harmonic(std::uint32_t n, std::uint32_t p, std::uint32_t k);

}  // namespace supercong

#endif
