#include "supercong/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace supercong {

Rational::Rational(long long v) {
    mpq_init(q_);
    BigInt b(v);
    mpq_set_z(q_, b.raw());
}

Rational::Rational(const BigInt& v) {
    mpq_init(q_);
    mpq_set_z(q_, v.raw());
}

Rational::Rational(std::int64_t num, std::int64_t den) {
    mpq_init(q_);
    if (den == 0) {
        mpq_clear(q_);
        throw std::domain_error("Rational: zero denominator");
    }
    BigInt n(num), d(den);
    mpz_set(mpq_numref(q_), n.raw());
    mpz_set(mpq_denref(q_), d.raw());
    if (mpz_sgn(mpq_denref(q_)) < 0) {
        mpz_neg(mpq_numref(q_), mpq_numref(q_));
        mpz_neg(mpq_denref(q_), mpq_denref(q_));
    }
    mpq_canonicalize(q_);
}

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den.is_zero()) throw std::domain_error("Rational: zero denominator");
    mpq_init(q_);
    mpz_set(mpq_numref(q_), num.raw());
    mpz_set(mpq_denref(q_), den.raw());
    if (mpz_sgn(mpq_denref(q_)) < 0) {
        mpz_neg(mpq_numref(q_), mpq_numref(q_));
        mpz_neg(mpq_denref(q_), mpq_denref(q_));
    }
    mpq_canonicalize(q_);
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den.sign() <= 0)
        throw std::invalid_argument("Rational: denominator in literal must be positive: \"" +
                                    std::string(text) + "\"");
    return Rational(num, den);
}

BigInt Rational::num() const {
    BigInt r;
    mpz_set(r.raw(), mpq_numref(q_));
    return r;
}

BigInt Rational::den() const {
    BigInt r;
    mpz_set(r.raw(), mpq_denref(q_));
    return r;
}

Rational Rational::operator-() const {
    Rational r;
    mpq_neg(r.q_, q_);
    return r;
}

Rational Rational::abs() const {
    Rational r;
    mpq_abs(r.q_, q_);
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    Rational r;
    mpq_inv(r.q_, q_);
    return r;
}

Rational Rational::pow(std::int64_t e) const {
    if (e == 0) return Rational(1);
    const Rational base = e < 0 ? inverse() : *this;
    std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
    // square-and-multiply on exact rationals
    Rational acc(1);
    Rational sq = base;
    while (n > 0) {
        if (n & 1) acc *= sq;
        n >>= 1;
        if (n) sq *= sq;
    }
    return acc;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    mpq_div(q_, q_, o.q_);
    return *this;
}

std::string Rational::to_string() const {
    if (is_integer()) return num().to_string();
    return num().to_string() + "/" + den().to_string();
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

}  // namespace supercong
