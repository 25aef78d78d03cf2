#ifndef SUPERCONG_MODULAR_HPP
#define SUPERCONG_MODULAR_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "supercong/rational.hpp"

namespace supercong {

/// Base class for the arithmetic contract violations this library reports.
struct ArithError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// reduce() was asked for a rational whose denominator p divides.
struct DenominatorDivisibleByP : ArithError {
    using ArithError::ArithError;
};

/// Residue division by a value divisible by p.
struct NonUnitDivisor : ArithError {
    using ArithError::ArithError;
};

/// Fermat quotient of a base divisible by p.
struct BaseDivisibleByP : ArithError {
    using ArithError::ArithError;
};

/// harmonic() hit a term 1/m with p | m.
struct TermDivisibleByP : ArithError {
    using ArithError::ArithError;
};

/// Arithmetic between residues with different (p, k).
struct ModulusMismatch : ArithError {
    using ArithError::ArithError;
};

std::uint64_t pow_mod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
/// Inverse of a modulo m (extended Euclid); throws NonUnitDivisor when gcd(a, m) != 1.
std::uint64_t inv_mod_u64(std::uint64_t a, std::uint64_t m);

/// A value modulo p^k with its modulus attached. p is an odd prime > 3 and
/// k is 1, 2 or 3; arithmetic between residues requires identical (p, k).
class Residue {
public:
    Residue(std::uint64_t value, std::uint32_t p, std::uint32_t k);

    std::uint64_t value() const noexcept { return value_; }
    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t k() const noexcept { return k_; }
    std::uint64_t modulus() const noexcept { return mod_; }
    bool is_zero() const noexcept { return value_ == 0; }

    Residue operator+(const Residue& o) const;
    Residue operator-(const Residue& o) const;
    Residue operator*(const Residue& o) const;
    Residue operator/(const Residue& o) const;  // throws NonUnitDivisor when p | o
    Residue operator-() const;
    Residue pow(std::uint64_t e) const;

    friend bool operator==(const Residue& a, const Residue& b) {
        return a.p_ == b.p_ && a.k_ == b.k_ && a.value_ == b.value_;
    }
    friend bool operator!=(const Residue& a, const Residue& b) { return !(a == b); }

private:
    void require_same(const Residue& o) const;

    std::uint64_t value_;
    std::uint32_t p_;
    std::uint32_t k_;
    std::uint64_t mod_;
};

std::ostream& operator<<(std::ostream& os, const Residue& r);

/// Ring homomorphism from p-integral rationals onto Z/p^kZ:
/// num * den^{-1} mod p^k. Throws DenominatorDivisibleByP when p | den(q).
Residue reduce(const Rational& q, std::uint32_t p, std::uint32_t k);

/// reduce(q, p, 1).value() == 0, i.e. q is in pZ_p.
bool reduces_to_zero(const Rational& q, std::uint32_t p);

}  // namespace supercong

#endif
