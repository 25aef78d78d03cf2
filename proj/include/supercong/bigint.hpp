#ifndef SUPERCONG_BIGINT_HPP
#define SUPERCONG_BIGINT_HPP

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace supercong {

/// Arbitrary-precision signed integer with value semantics.
/// Division and remainder truncate toward zero; mod_u64 is the
/// mathematical remainder in [0, m).
class BigInt {
public:
    BigInt() noexcept { mpz_init(z_); }
    BigInt(const BigInt& o) { mpz_init_set(z_, o.z_); }
    BigInt(BigInt&& o) noexcept {
        mpz_init(z_);
        mpz_swap(z_, o.z_);
    }
    BigInt(int v) { mpz_init_set_si(z_, v); }
    BigInt(long v) { mpz_init_set_si(z_, v); }
    BigInt(long long v);
    BigInt(unsigned long v) { mpz_init_set_ui(z_, v); }
    BigInt(unsigned long long v);
    explicit BigInt(std::string_view decimal);
    ~BigInt() { mpz_clear(z_); }

    BigInt& operator=(const BigInt& o) {
        if (this != &o) mpz_set(z_, o.z_);
        return *this;
    }
    BigInt& operator=(BigInt&& o) noexcept {
        mpz_swap(z_, o.z_);
        return *this;
    }

    int sign() const noexcept { return mpz_sgn(z_); }
    bool is_zero() const noexcept { return mpz_sgn(z_) == 0; }
    bool odd() const noexcept { return mpz_odd_p(z_) != 0; }
    std::size_t bit_length() const { return is_zero() ? 0 : mpz_sizeinbase(z_, 2); }

    bool fits_int64() const noexcept;
    std::int64_t to_int64() const;  // throws std::overflow_error when out of range
    std::string to_string() const;

    BigInt operator-() const;
    BigInt abs() const;

    BigInt& operator+=(const BigInt& o) { mpz_add(z_, z_, o.z_); return *this; }
    BigInt& operator-=(const BigInt& o) { mpz_sub(z_, z_, o.z_); return *this; }
    BigInt& operator*=(const BigInt& o) { mpz_mul(z_, z_, o.z_); return *this; }
    BigInt& operator/=(const BigInt& o);
    BigInt& operator%=(const BigInt& o);

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
    friend BigInt operator/(BigInt a, const BigInt& b) { return a /= b; }
    friend BigInt operator%(BigInt a, const BigInt& b) { return a %= b; }

    friend bool operator==(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) < 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    /// Truncated quotient and remainder: a = q*b + r, sign(r) == sign(a).
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    /// Exact division; throws std::domain_error when b does not divide a.
    static BigInt divexact(const BigInt& a, const BigInt& b);
    static bool divisible(const BigInt& a, const BigInt& b) {
        return mpz_divisible_p(a.z_, b.z_) != 0;
    }
    static BigInt gcd(const BigInt& a, const BigInt& b);
    static BigInt lcm(const BigInt& a, const BigInt& b);
    static BigInt pow(const BigInt& base, std::uint64_t e);

    /// Mathematical remainder in [0, m), also for negative values.
    std::uint64_t mod_u64(std::uint64_t m) const;

    // Read-only view of the underlying GMP value, for the Rational layer.
    const mpz_t& raw() const noexcept { return z_; }
    mpz_t& raw() noexcept { return z_; }

private:
    mpz_t z_;
};

std::ostream& operator<<(std::ostream& os, const BigInt& v);

}  // namespace supercong

#endif
