#include "supercong/modular.hpp"

#include <ostream>

#include "supercong/primes.hpp"

namespace supercong {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t pk_modulus(std::uint32_t p, std::uint32_t k) {
    if (k < 1 || k > 3) throw std::invalid_argument("Residue: k must be 1, 2 or 3");
    if (p <= 3 || !is_prime(p)) throw std::invalid_argument("Residue: p must be an odd prime > 3");
    std::uint64_t m = p;
    for (std::uint32_t i = 1; i < k; ++i) m *= p;
    return m;
}

}  // namespace

std::uint64_t pow_mod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t acc = 1 % m;
    std::uint64_t b = base % m;
    while (exp > 0) {
        if (exp & 1) acc = mul_mod(acc, b, m);
        exp >>= 1;
        if (exp) b = mul_mod(b, b, m);
    }
    return acc;
}

std::uint64_t inv_mod_u64(std::uint64_t a, std::uint64_t m) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (r != 1)
        throw NonUnitDivisor("inverse does not exist: gcd(" + std::to_string(a) + ", " +
                             std::to_string(m) + ") != 1");
    if (t < 0) t += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(t);
}

Residue::Residue(std::uint64_t value, std::uint32_t p, std::uint32_t k)
    : value_(0), p_(p), k_(k), mod_(pk_modulus(p, k)) {
    value_ = value % mod_;
}

void Residue::require_same(const Residue& o) const {
    if (p_ != o.p_ || k_ != o.k_)
        throw ModulusMismatch("residue arithmetic across moduli: p^k = " + std::to_string(p_) + "^" +
                              std::to_string(k_) + " vs " + std::to_string(o.p_) + "^" +
                              std::to_string(o.k_));
}

Residue Residue::operator+(const Residue& o) const {
    require_same(o);
    std::uint64_t v = value_ + o.value_;
    if (v >= mod_) v -= mod_;
    return Residue(v, p_, k_);
}

Residue Residue::operator-(const Residue& o) const {
    require_same(o);
    std::uint64_t v = value_ >= o.value_ ? value_ - o.value_ : value_ + mod_ - o.value_;
    return Residue(v, p_, k_);
}

Residue Residue::operator*(const Residue& o) const {
    require_same(o);
    return Residue(mul_mod(value_, o.value_, mod_), p_, k_);
}

Residue Residue::operator/(const Residue& o) const {
    require_same(o);
    if (o.value_ % p_ == 0)
        throw NonUnitDivisor("residue division by non-unit " + std::to_string(o.value_) + " mod " +
                             std::to_string(p_) + "^" + std::to_string(k_));
    return Residue(mul_mod(value_, inv_mod_u64(o.value_, mod_), mod_), p_, k_);
}

Residue Residue::operator-() const {
    return Residue(value_ == 0 ? 0 : mod_ - value_, p_, k_);
}

Residue Residue::pow(std::uint64_t e) const {
    return Residue(pow_mod_u64(value_, e, mod_), p_, k_);
}

std::ostream& operator<<(std::ostream& os, const Residue& r) {
    return os << r.value() << " (mod " << r.p() << "^" << r.k() << ")";
}

Residue reduce(const Rational& q, std::uint32_t p, std::uint32_t k) {
    const std::uint64_t m = pk_modulus(p, k);
    const BigInt den = q.den();
    if (den.mod_u64(p) == 0)
        throw DenominatorDivisibleByP("reduce: denominator of " + q.to_string() +
                                      " is divisible by p = " + std::to_string(p));
    const std::uint64_t n = q.num().mod_u64(m);
    const std::uint64_t d = den.mod_u64(m);
    return Residue(mul_mod(n, inv_mod_u64(d, m), m), p, k);
}

bool reduces_to_zero(const Rational& q, std::uint32_t p) {
    if (q.is_zero()) return true;
    if (q.den().mod_u64(p) == 0)
        throw DenominatorDivisibleByP("reduce: denominator of " + q.to_string() +
                                      " is divisible by p = " + std::to_string(p));
    return q.num().mod_u64(p) == 0;
}

}  // namespace supercong
