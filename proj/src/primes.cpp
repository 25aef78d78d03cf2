#include "supercong/primes.hpp"

namespace supercong {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (std::uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

std::vector<std::uint32_t> primes_in_range(std::uint32_t lo, std::uint32_t hi) {
    std::vector<std::uint32_t> out;
    for (std::uint64_t n = lo; n <= hi; ++n)
        if (is_prime(n)) out.push_back(static_cast<std::uint32_t>(n));
    return out;
}

}  // namespace supercong
