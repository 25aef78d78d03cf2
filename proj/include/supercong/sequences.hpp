#ifndef SUPERCONG_SEQUENCES_HPP
#define SUPERCONG_SEQUENCES_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "supercong/modular.hpp"
#include "supercong/rational.hpp"

namespace supercong {

enum class SequenceKind { Bernoulli, Euler, U };

/// Exact values of one sequence for indices 0..N. Built once, then
/// immutable; safe to share across threads.
struct SequenceTable {
    SequenceKind kind;
    std::vector<Rational> values;

    const Rational& at(std::size_t n) const { return values.at(n); }
    std::size_t max_index() const { return values.size() - 1; }
};

/// Builds the table from the defining recurrences:
///   Bernoulli: B_0 = 1, sum_{k=0..n-1} C(n,k) B_k = 0  (n >= 2)
///   Euler:     E_0 = 1, E_n = -sum_{k=1..n/2} C(n,2k) E_{n-2k}
///   U:         U_0 = 1, U_n = -2 sum_{k=1..n/2} C(n,2k) U_{n-2k}
SequenceTable build_table(SequenceKind kind, std::size_t n_max);

enum class LucasKind { Pell, S };

struct LucasValue {
    LucasKind kind;
    std::uint64_t index;
    BigInt value;
};

/// Pell: P_0=0, P_1=1, P_{n+1} = 2P_n + P_{n-1};
/// S:    S_0=0, S_1=1, S_{n+1} = 4S_n - S_{n-1}.
LucasValue lucas_value(LucasKind kind, std::uint64_t n);

/// Same recurrence iterated in Z/p^kZ; agrees with reduce(lucas_value).
Residue lucas_mod(LucasKind kind, std::uint64_t n, std::uint32_t p, std::uint32_t k);

/// Legendre symbol (c/p) via Euler's criterion; 0 when p | c.
int legendre(std::int64_t c, std::uint32_t p);

/// Process-wide cache of sequence tables; get() extends tables on demand
/// and hands out immutable snapshots.
class TableCache {
public:
    std::shared_ptr<const SequenceTable> get(SequenceKind kind, std::size_t n_max);

private:
    std::mutex mu_;
    std::shared_ptr<const SequenceTable> tables_[3];
};

TableCache& global_tables();

}  // namespace supercong

#endif
