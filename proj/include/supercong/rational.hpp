#ifndef SUPERCONG_RATIONAL_HPP
#define SUPERCONG_RATIONAL_HPP

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "supercong/bigint.hpp"

namespace supercong {

/// Exact rational number, always in lowest terms with a positive
/// denominator; the canonical zero is 0/1. Every constructor
/// normalizes, so equality is structural.
class Rational {
public:
    Rational() noexcept { mpq_init(q_); }
    Rational(const Rational& o) { mpq_init(q_); mpq_set(q_, o.q_); }
    Rational(Rational&& o) noexcept { mpq_init(q_); mpq_swap(q_, o.q_); }
    Rational(int v) { mpq_init(q_); mpq_set_si(q_, v, 1); }
    Rational(long v) { mpq_init(q_); mpq_set_si(q_, v, 1); }
    Rational(long long v);
    Rational(const BigInt& v);
    Rational(std::int64_t num, std::int64_t den);
    Rational(const BigInt& num, const BigInt& den);  // throws std::domain_error on den == 0
    ~Rational() { mpq_clear(q_); }

    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }

    /// Parses "num", "num/den", with optional leading sign on the numerator.
    static Rational parse(std::string_view text);

    BigInt num() const;
    BigInt den() const;
    bool is_zero() const noexcept { return mpq_sgn(q_) == 0; }
    bool is_integer() const noexcept { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
    int sign() const noexcept { return mpq_sgn(q_); }

    Rational operator-() const;
    Rational abs() const;
    Rational inverse() const;  // throws std::domain_error on zero
    /// Integer power; negative exponents invert (throw on zero base).
    Rational pow(std::int64_t e) const;

    Rational& operator+=(const Rational& o) { mpq_add(q_, q_, o.q_); return *this; }
    Rational& operator-=(const Rational& o) { mpq_sub(q_, q_, o.q_); return *this; }
    Rational& operator*=(const Rational& o) { mpq_mul(q_, q_, o.q_); return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    /// "n" for integers, "n/d" otherwise.
    std::string to_string() const;

private:
    mpq_t q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& v);

}  // namespace supercong

#endif
