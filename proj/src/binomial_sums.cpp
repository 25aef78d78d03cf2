#include "supercong/binomial_sums.hpp"

#include <stdexcept>

namespace supercong {

namespace {

std::uint32_t upper_index(std::uint32_t p, bool half) { return half ? (p - 1) / 2 : p - 1; }

Rational weight_of(WeightKind w, std::uint32_t k) {
    switch (w) {
        case WeightKind::One: return Rational(1);
        case WeightKind::K: return Rational(static_cast<std::int64_t>(k), 1);
        case WeightKind::InvK: return Rational(1, static_cast<std::int64_t>(k));
        case WeightKind::Inv2kPlus1: return Rational(1, 2 * static_cast<std::int64_t>(k) + 1);
        case WeightKind::Inv2kMinus1: return Rational(1, 2 * static_cast<std::int64_t>(k) - 1);
    }
    throw std::logic_error("weight_of: bad WeightKind");
}

}  // namespace

Rational binom(const Rational& a, std::uint64_t k) {
    Rational r(1);
    for (std::uint64_t j = 1; j <= k; ++j) {
        r *= (a - Rational(static_cast<long long>(j - 1))) / Rational(static_cast<long long>(j));
        if (r.is_zero()) break;  // integer a < k: stays zero
    }
    return r;
}

BigInt binom_int(std::uint64_t n, std::uint64_t r) {
    if (r > n) return BigInt(0);
    if (r > n - r) r = n - r;
    BigInt c(1);
    for (std::uint64_t j = 1; j <= r; ++j) {
        c *= BigInt(static_cast<unsigned long long>(n - r + j));
        c = BigInt::divexact(c, BigInt(static_cast<unsigned long long>(j)));
    }
    return c;
}

Rational pair_sum(const Rational& a, std::uint32_t p, WeightKind weight, bool half) {
    const std::uint32_t kmax = upper_index(p, half);
    const BigInt n = a.num();
    const BigInt d = a.den();
    // running product C(a,k) C(-1-a,k), advanced by (a-k+1)(-a-k)/k^2
    Rational b(1);
    Rational acc;
    if (weight != WeightKind::InvK) acc += weight_of(weight, 0);  // b_0 = 1
    for (std::uint32_t k = 1; k <= kmax; ++k) {
        const BigInt kb(static_cast<long long>(k));
        const BigInt step_num = (n - BigInt(static_cast<long long>(k - 1)) * d) * (-(n + kb * d));
        const BigInt step_den = d * d * kb * kb;
        b *= Rational(step_num, step_den);
        acc += weight_of(weight, k) * b;
    }
    return acc;
}

Rational signed_alt_sum(const Rational& a, std::uint32_t p) {
    Rational c(1);  // C(a, k)
    Rational acc;
    for (std::uint32_t k = 1; k <= p - 1; ++k) {
        c *= (a - Rational(static_cast<long long>(k - 1))) / Rational(static_cast<long long>(k));
        const Rational term = c / Rational(static_cast<long long>(k));
        acc += (k % 2 == 1) ? term : -term;
    }
    return acc;
}

Rational neg2_sum(const Rational& b, std::uint32_t p) {
    Rational c(1);  // C(b, k) (-2)^k
    Rational acc(1);
    for (std::uint32_t k = 1; k <= p - 1; ++k) {
        c *= (b - Rational(static_cast<long long>(k - 1))) * Rational(-2, static_cast<long long>(k));
        acc += c;
    }
    return acc;
}

Rational central_form(CentralFamily family, std::uint64_t k) {
    BigInt num;
    switch (family) {
        case CentralFamily::F16: {
            const BigInt c = binom_int(2 * k, k);
            num = c * c;
            break;
        }
        case CentralFamily::F27: num = binom_int(2 * k, k) * binom_int(3 * k, k); break;
        case CentralFamily::F64: num = binom_int(2 * k, k) * binom_int(4 * k, 2 * k); break;
        case CentralFamily::F432: num = binom_int(3 * k, k) * binom_int(6 * k, 3 * k); break;
    }
    const BigInt den = BigInt::pow(BigInt(static_cast<int>(family)), k);
    return Rational(num, den);
}

Rational central_sum(CentralFamily family, std::uint32_t p, WeightKind weight, bool half) {
    const std::uint32_t kmax = upper_index(p, half);
    Rational acc;
    for (std::uint32_t k = (weight == WeightKind::InvK ? 1 : 0); k <= kmax; ++k)
        acc += weight_of(weight, k) * central_form(family, k);
    return acc;
}

namespace {

// A residue together with the exact power of p it carries:
// value = unit * p^e with p coprime to unit, or zero.
struct PValued {
    std::uint64_t unit = 1;
    std::int64_t e = 0;
    bool zero = false;
};

struct ModCtx {
    std::uint32_t p;
    std::uint32_t k;
    std::uint64_t m;  // p^k
};

// strips all powers of p from x, returning the count
std::int64_t strip_p(BigInt& x, std::uint32_t p) {
    std::int64_t v = 0;
    const BigInt pb(static_cast<long long>(p));
    while (!x.is_zero() && x.mod_u64(p) == 0) {
        x = BigInt::divexact(x, pb);
        ++v;
    }
    return v;
}

void mul_by(PValued& b, BigInt x, const ModCtx& c) {
    if (b.zero) return;
    if (x.is_zero()) {
        b.zero = true;
        return;
    }
    b.e += strip_p(x, c.p);
    b.unit = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(b.unit) * x.mod_u64(c.m)) % c.m);
}

void div_by(PValued& b, BigInt x, const ModCtx& c) {
    if (x.is_zero()) throw std::domain_error("residue-native sum: division by zero");
    if (b.zero) return;
    b.e -= strip_p(x, c.p);
    b.unit = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(b.unit) * inv_mod_u64(x.mod_u64(c.m), c.m)) % c.m);
}

std::uint64_t materialize(const PValued& b, const ModCtx& c) {
    if (b.zero) return 0;
    if (b.e < 0)
        throw DenominatorDivisibleByP("residue-native sum: term carries negative power of p");
    if (b.e >= static_cast<std::int64_t>(c.k)) return 0;
    std::uint64_t scale = 1;
    for (std::int64_t i = 0; i < b.e; ++i) scale *= c.p;
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(b.unit) * scale) % c.m);
}

void add_to(std::uint64_t& acc, std::uint64_t term, const ModCtx& c) {
    acc += term;
    if (acc >= c.m) acc -= c.m;
}

ModCtx make_ctx(std::uint32_t p, std::uint32_t k) {
    return ModCtx{p, k, Residue(0, p, k).modulus()};
}

}  // namespace

Residue pair_sum_mod(const Rational& a, std::uint32_t p, std::uint32_t k, WeightKind weight,
                     bool half, const Rational& scale) {
    const ModCtx c = make_ctx(p, k);
    const std::uint32_t kmax = upper_index(p, half);
    const BigInt n = a.num();
    const BigInt d = a.den();
    if (d.mod_u64(p) == 0)
        throw DenominatorDivisibleByP("pair_sum_mod: p divides den(a)");
    PValued b;  // running C(a,j) C(-1-a,j), scaled
    mul_by(b, scale.num(), c);
    div_by(b, scale.den(), c);
    std::uint64_t acc = 0;
    auto add_weighted = [&](std::uint32_t j) {
        PValued t = b;
        switch (weight) {
            case WeightKind::One: break;
            case WeightKind::K: mul_by(t, BigInt(static_cast<long long>(j)), c); break;
            case WeightKind::InvK: div_by(t, BigInt(static_cast<long long>(j)), c); break;
            case WeightKind::Inv2kPlus1:
                div_by(t, BigInt(2LL * j + 1), c);
                break;
            case WeightKind::Inv2kMinus1:
                div_by(t, BigInt(2LL * static_cast<long long>(j) - 1), c);
                break;
        }
        add_to(acc, materialize(t, c), c);
    };
    if (weight != WeightKind::InvK) add_weighted(0);
    for (std::uint32_t j = 1; j <= kmax; ++j) {
        const BigInt jb(static_cast<long long>(j));
        mul_by(b, (n - BigInt(static_cast<long long>(j - 1)) * d) * (-(n + jb * d)), c);
        div_by(b, d * d * jb * jb, c);
        add_weighted(j);
    }
    return Residue(acc, p, k);
}

Residue signed_alt_sum_mod(const Rational& a, std::uint32_t p, std::uint32_t k) {
    const ModCtx c = make_ctx(p, k);
    const BigInt n = a.num();
    const BigInt d = a.den();
    if (d.mod_u64(p) == 0)
        throw DenominatorDivisibleByP("signed_alt_sum_mod: p divides den(a)");
    PValued b;  // running C(a, j)
    std::uint64_t acc = 0;
    for (std::uint32_t j = 1; j <= p - 1; ++j) {
        mul_by(b, n - BigInt(static_cast<long long>(j - 1)) * d, c);
        div_by(b, d * BigInt(static_cast<long long>(j)), c);
        PValued t = b;
        div_by(t, BigInt(static_cast<long long>(j)), c);
        std::uint64_t v = materialize(t, c);
        if (j % 2 == 0 && v != 0) v = c.m - v;
        add_to(acc, v, c);
    }
    return Residue(acc, p, k);
}

Residue neg2_sum_mod(const Rational& b_arg, std::uint32_t p, std::uint32_t k) {
    const ModCtx c = make_ctx(p, k);
    const BigInt n = b_arg.num();
    const BigInt d = b_arg.den();
    if (d.mod_u64(p) == 0)
        throw DenominatorDivisibleByP("neg2_sum_mod: p divides den(b)");
    PValued b;  // running C(b, j) (-2)^j
    std::uint64_t acc = materialize(b, c);
    for (std::uint32_t j = 1; j <= p - 1; ++j) {
        mul_by(b, (n - BigInt(static_cast<long long>(j - 1)) * d) * BigInt(-2), c);
        div_by(b, d * BigInt(static_cast<long long>(j)), c);
        add_to(acc, materialize(b, c), c);
    }
    return Residue(acc, p, k);
}

}  // namespace supercong
