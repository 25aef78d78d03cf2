#include "supercong/bigint.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace supercong {

namespace {

bool valid_decimal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

BigInt::BigInt(long long v) {
    static_assert(sizeof(long long) == sizeof(std::int64_t));
    if (v >= std::numeric_limits<long>::min() && v <= std::numeric_limits<long>::max()) {
        mpz_init_set_si(z_, static_cast<long>(v));
    } else {
        mpz_init(z_);
        mpz_import(z_, 1, 1, sizeof(v), 0, 0, &v);  // unreachable on LP64
    }
}

BigInt::BigInt(unsigned long long v) {
    if (v <= std::numeric_limits<unsigned long>::max()) {
        mpz_init_set_ui(z_, static_cast<unsigned long>(v));
    } else {
        mpz_init(z_);
        mpz_import(z_, 1, 1, sizeof(v), 0, 0, &v);
    }
}

BigInt::BigInt(std::string_view decimal) {
    if (!valid_decimal(decimal))
        throw std::invalid_argument("BigInt: malformed decimal literal \"" + std::string(decimal) + "\"");
    std::string buf(decimal);
    if (buf[0] == '+') buf.erase(buf.begin());
    if (mpz_init_set_str(z_, buf.c_str(), 10) != 0) {
        mpz_clear(z_);
        throw std::invalid_argument("BigInt: malformed decimal literal \"" + std::string(decimal) + "\"");
    }
}

bool BigInt::fits_int64() const noexcept {
    if (mpz_fits_slong_p(z_)) return true;
    // long is 64-bit on this platform; anything wider does not fit.
    return false;
}

std::int64_t BigInt::to_int64() const {
    if (!fits_int64()) throw std::overflow_error("BigInt: value does not fit in int64");
    return static_cast<std::int64_t>(mpz_get_si(z_));
}

std::string BigInt::to_string() const {
    std::vector<char> buf(mpz_sizeinbase(z_, 10) + 2);
    mpz_get_str(buf.data(), 10, z_);
    return std::string(buf.data());
}

BigInt BigInt::operator-() const {
    BigInt r;
    mpz_neg(r.z_, z_);
    return r;
}

BigInt BigInt::abs() const {
    BigInt r;
    mpz_abs(r.z_, z_);
    return r;
}

BigInt& BigInt::operator/=(const BigInt& o) {
    if (o.is_zero()) throw std::domain_error("BigInt: division by zero");
    mpz_tdiv_q(z_, z_, o.z_);
    return *this;
}

BigInt& BigInt::operator%=(const BigInt& o) {
    if (o.is_zero()) throw std::domain_error("BigInt: division by zero");
    mpz_tdiv_r(z_, z_, o.z_);
    return *this;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
    mpz_tdiv_qr(q.z_, r.z_, a.z_, b.z_);
}

BigInt BigInt::divexact(const BigInt& a, const BigInt& b) {
    if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
    if (!mpz_divisible_p(a.z_, b.z_))
        throw std::domain_error("BigInt: divexact with non-divisible operands");
    BigInt r;
    mpz_divexact(r.z_, a.z_, b.z_);
    return r;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.z_, a.z_, b.z_);
    return r;
}

BigInt BigInt::lcm(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.z_, a.z_, b.z_);
    return r;
}

BigInt BigInt::pow(const BigInt& base, std::uint64_t e) {
    BigInt r;
    mpz_pow_ui(r.z_, base.z_, static_cast<unsigned long>(e));
    return r;
}

std::uint64_t BigInt::mod_u64(std::uint64_t m) const {
    if (m == 0) throw std::domain_error("BigInt: modulus zero");
    // fdiv gives the non-negative remainder for any sign of the value.
    return mpz_fdiv_ui(z_, static_cast<unsigned long>(m));
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

}  // namespace supercong
