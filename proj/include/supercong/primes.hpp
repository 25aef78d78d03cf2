#ifndef SUPERCONG_PRIMES_HPP
#define SUPERCONG_PRIMES_HPP

#include <cstdint>
#include <vector>

namespace supercong {

/// Deterministic trial-division primality check. Callers supply primes;
/// this guards them at module boundaries.
bool is_prime(std::uint64_t n);

/// All primes in [lo, hi], inclusive.
std::vector<std::uint32_t> primes_in_range(std::uint32_t lo, std::uint32_t hi);

}  // namespace supercong

#endif
