#include "supercong/polynomials.hpp"

#include <stdexcept>

namespace supercong {

namespace {

void require(const SequenceTable& t, SequenceKind kind, std::size_t n, const char* who) {
    if (t.kind != kind || t.max_index() < n)
        throw std::invalid_argument(std::string(who) + ": table missing required indices");
}

// sum_{k=0..k_hi} C(n,k) B_k x^{n-k}
Rational bernoulli_partial(const SequenceTable& bern, std::uint32_t n, const Rational& x,
                           std::uint32_t k_hi) {
    Rational acc;
    BigInt c(1);  // C(n, k)
    for (std::uint32_t k = 0; k <= k_hi; ++k) {
        const Rational& b = bern.at(k);
        if (!b.is_zero())
            acc += Rational(c) * b * x.pow(static_cast<std::int64_t>(n - k));
        c *= BigInt(static_cast<long long>(n - k));
        c = BigInt::divexact(c, BigInt(static_cast<long long>(k + 1)));
    }
    return acc;
}

}  // namespace

Rational bernoulli_poly(const SequenceTable& bern, std::uint32_t n, const Rational& x) {
    require(bern, SequenceKind::Bernoulli, n, "bernoulli_poly");
    return bernoulli_partial(bern, n, x, n);
}

Rational bernoulli_poly_diff(const SequenceTable& bern, std::uint32_t n, const Rational& x) {
    if (n == 0) throw std::invalid_argument("bernoulli_poly_diff: n must be >= 1");
    require(bern, SequenceKind::Bernoulli, n - 1, "bernoulli_poly_diff");
    return bernoulli_partial(bern, n, x, n - 1);
}

Rational euler_poly(const SequenceTable& euler, std::uint32_t n, const Rational& x) {
    require(euler, SequenceKind::Euler, n, "euler_poly");
    const Rational y = Rational(2) * x - Rational(1);
    Rational acc;
    BigInt c(1);  // C(n, r)
    for (std::uint32_t r = 0; r <= n; ++r) {
        const Rational& e = euler.at(r);
        if (!e.is_zero())
            acc += Rational(c) * y.pow(static_cast<std::int64_t>(n - r)) * e;
        c *= BigInt(static_cast<long long>(n - r));
        c = BigInt::divexact(c, BigInt(static_cast<long long>(r + 1)));
    }
    return acc / Rational(2).pow(n);
}

Rational euler_via_bernoulli(const SequenceTable& bern, std::uint32_t n, const Rational& x,
                             EulerForm form) {
    require(bern, SequenceKind::Bernoulli, n + 1, "euler_via_bernoulli");
    const Rational half_x = x / Rational(2);
    const Rational two_pow = Rational(2).pow(static_cast<std::int64_t>(n) + 1);
    const Rational inv_n1 = Rational(1, static_cast<std::int64_t>(n) + 1);
    if (form == EulerForm::A) {
        return Rational(2) * inv_n1 *
               (bernoulli_poly(bern, n + 1, x) - two_pow * bernoulli_poly(bern, n + 1, half_x));
    }
    const Rational mid = (x + Rational(1)) / Rational(2);
    return two_pow * inv_n1 * (bernoulli_poly(bern, n + 1, mid) - bernoulli_poly(bern, n + 1, half_x));
}

Rational bernoulli_poly(std::uint32_t n, const Rational& x) {
    return bernoulli_poly(*global_tables().get(SequenceKind::Bernoulli, n), n, x);
}

Rational bernoulli_poly_diff(std::uint32_t n, const Rational& x) {
    return bernoulli_poly_diff(*global_tables().get(SequenceKind::Bernoulli, n == 0 ? 0 : n - 1), n, x);
}

Rational euler_poly(std::uint32_t n, const Rational& x) {
    return euler_poly(*global_tables().get(SequenceKind::Euler, n), n, x);
}

Rational euler_via_bernoulli(std::uint32_t n, const Rational& x, EulerForm form) {
    return euler_via_bernoulli(*global_tables().get(SequenceKind::Bernoulli, n + 1), n, x, form);
}

}  // namespace supercong
