#include "supercong/sequences.hpp"

#include <stdexcept>

#include "supercong/primes.hpp"

namespace supercong {

namespace {

// Extends `values` (holding indices 0..size-1) up to index n_max.
void extend_bernoulli(std::vector<Rational>& values, std::size_t n_max) {
    if (values.empty()) values.push_back(Rational(1));
    for (std::size_t n = values.size(); n <= n_max; ++n) {
        // sum_{k=0..n} C(n+1,k) B_k = 0  =>  B_n = -(1/(n+1)) sum_{k<n} C(n+1,k) B_k
        BigInt c(1);  // C(n+1, k), updated incrementally
        Rational acc;
        for (std::size_t k = 0; k < n; ++k) {
            if (!values[k].is_zero()) acc += Rational(c) * values[k];
            c *= BigInt(static_cast<long long>(n + 1 - k));
            c = BigInt::divexact(c, BigInt(static_cast<long long>(k + 1)));
        }
        acc /= Rational(static_cast<std::int64_t>(n + 1), 1);
        values.push_back(-acc);
    }
}

void extend_euler_like(std::vector<Rational>& values, std::size_t n_max, int factor) {
    if (values.empty()) values.push_back(Rational(1));
    for (std::size_t n = values.size(); n <= n_max; ++n) {
        if (n % 2 == 1) {
            values.push_back(Rational());
            continue;
        }
        Rational acc;
        BigInt c(1);  // C(n, 2k) via two incremental steps per k
        std::size_t j = 0;
        for (std::size_t k = 1; 2 * k <= n; ++k) {
            for (; j < 2 * k; ++j) {
                c *= BigInt(static_cast<long long>(n - j));
                c = BigInt::divexact(c, BigInt(static_cast<long long>(j + 1)));
            }
            const Rational& prev = values[n - 2 * k];
            if (!prev.is_zero()) acc += Rational(c) * prev;
        }
        values.push_back(Rational(-factor) * acc);
    }
}

}  // namespace

SequenceTable build_table(SequenceKind kind, std::size_t n_max) {
    SequenceTable t;
    t.kind = kind;
    switch (kind) {
        case SequenceKind::Bernoulli: extend_bernoulli(t.values, n_max); break;
        case SequenceKind::Euler: extend_euler_like(t.values, n_max, 1); break;
        case SequenceKind::U: extend_euler_like(t.values, n_max, 2); break;
    }
    return t;
}

LucasValue lucas_value(LucasKind kind, std::uint64_t n) {
    const std::int64_t mul = kind == LucasKind::Pell ? 2 : 4;
    const std::int64_t add = kind == LucasKind::Pell ? 1 : -1;
    BigInt prev(0), cur(1);
    if (n == 0) return {kind, n, prev};
    for (std::uint64_t i = 1; i < n; ++i) {
        BigInt next = BigInt(mul) * cur + BigInt(add) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return {kind, n, cur};
}

Residue lucas_mod(LucasKind kind, std::uint64_t n, std::uint32_t p, std::uint32_t k) {
    Residue prev(0, p, k), cur(1, p, k);
    const Residue mul(kind == LucasKind::Pell ? 2 : 4, p, k);
    if (n == 0) return prev;
    for (std::uint64_t i = 1; i < n; ++i) {
        Residue next = kind == LucasKind::Pell ? mul * cur + prev : mul * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

int legendre(std::int64_t c, std::uint32_t p) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("legendre: p must be an odd prime");
    const std::uint64_t cm = BigInt(c).mod_u64(p);
    if (cm == 0) return 0;
    const std::uint64_t e = pow_mod_u64(cm, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

std::shared_ptr<const SequenceTable> TableCache::get(SequenceKind kind, std::size_t n_max) {
    const int idx = static_cast<int>(kind);
    std::lock_guard<std::mutex> lock(mu_);
    auto& slot = tables_[idx];
    if (slot && slot->max_index() >= n_max) return slot;
    // Extend from the existing snapshot rather than rebuilding from scratch.
    auto next = std::make_shared<SequenceTable>();
    next->kind = kind;
    if (slot) next->values = slot->values;
    switch (kind) {
        case SequenceKind::Bernoulli: extend_bernoulli(next->values, n_max); break;
        case SequenceKind::Euler: extend_euler_like(next->values, n_max, 1); break;
        case SequenceKind::U: extend_euler_like(next->values, n_max, 2); break;
    }
    slot = next;
    return slot;
}

TableCache& global_tables() {
    static TableCache cache;
    return cache;
}

}  // namespace supercong
