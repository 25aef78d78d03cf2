#ifndef SUPERCONG_CATALOG_HPP
#define SUPERCONG_CATALOG_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "supercong/binomial_sums.hpp"
#include "supercong/modular.hpp"
#include "supercong/padic.hpp"
#include "supercong/polynomials.hpp"
#include "supercong/rational.hpp"
#include "supercong/sequences.hpp"

namespace supercong {

/// evaluate() was called for a (check, p, a) the check's hypotheses reject.
struct NotApplicable : ArithError {
    using ArithError::ArithError;
};

enum class CheckCost { Cheap, Expensive };

/// Per-(p, a) evaluation scratchpad. Memoizes the subexpressions that
/// several checks share (pair sums, central sums, polynomial values,
/// Fermat quotients, harmonic prefixes) so a scan evaluates each once.
/// Not thread-safe; use one Workspace per worker.
class Workspace {
public:
    Workspace(std::uint32_t p, std::optional<Rational> a, TableCache& tables);

    std::uint32_t p() const { return p_; }
    bool has_param() const { return par_.has_value(); }
    const PadicParam& par();
    std::uint32_t half() const { return (p_ - 1) / 2; }
    bool frac_low();               // <a>_p <= (p-1)/2
    Rational sign_frac();          // (-1)^{<a>_p}
    Rational p_rat() const { return Rational(static_cast<long long>(p_)); }

    const Rational& pair(WeightKind w, bool half);
    const Rational& salt();                      // signed alternating sum
    const Rational& neg2(const Rational& b);
    const Rational& central(CentralFamily f, WeightKind w, bool half);
    const Rational& qp(int c);                   // exact (c^{p-1}-1)/p
    const Rational& bern_poly_at(std::uint32_t n, const Rational& x);
    const Rational& bern_diff_at(std::uint32_t n, const Rational& x);
    const Rational& euler_at(std::uint32_t n, const Rational& x);
    const Rational& euler_number(std::uint32_t n);
    const Rational& u_number(std::uint32_t n);
    Rational harmonic_to(std::uint32_t m);       // sum_{r=1..m} 1/r
    BigInt lucas(LucasKind kind, std::uint64_t idx);
    int legendre_sym(std::int64_t c) const;      // (c/p)
    int legendre_p_mod3() const;                 // (p/3)
    BigInt pow2(std::uint32_t e) const { return BigInt::pow(BigInt(2), e); }

    TableCache& tables() { return tables_; }

private:
    std::uint32_t p_;
    std::optional<Rational> a_;
    std::optional<PadicParam> par_;
    TableCache& tables_;
    std::map<std::pair<int, int>, Rational> pair_memo_;
    std::optional<Rational> salt_memo_;
    std::vector<std::pair<Rational, Rational>> neg2_memo_;
    std::map<std::tuple<int, int, int>, Rational> central_memo_;
    std::map<int, Rational> qp_memo_;
    std::map<std::string, Rational> poly_memo_;
    std::vector<Rational> harmonic_memo_;  // harmonic_memo_[m] = H_m
};

/// One cataloged congruence: evaluators for both sides as exact
/// rationals (reduced to the check's modulus by the runner), an
/// applicability predicate over (p, a), and bookkeeping.
struct CongruenceCheck {
    std::string id;            // frozen; report files key on it
    std::string description;
    std::string statement;     // the congruence itself, self-describing
    std::uint32_t modulus_power = 2;
    bool parametric = false;
    CheckCost cost = CheckCost::Cheap;
    // number of (lhs, rhs) pairs one evaluation compares (e.g. one per r
    // for the half-binomial product expansion); 1 for most checks
    std::function<int(Workspace&)> instances;
    std::function<Rational(Workspace&, int)> lhs;
    std::function<Rational(Workspace&, int)> rhs;
    std::function<std::string(Workspace&)> branch;
};

/// The full catalog, in a fixed order; built once.
const std::vector<CongruenceCheck>& catalog();
const CongruenceCheck* find_check(std::string_view id);

struct CheckResult {
    std::string check_id;
    std::uint32_t p = 0;
    bool fixed_a = true;  // true: the check binds its own a ("fixed" marker)
    Rational a;
    std::string branch;
    std::uint32_t k = 0;
    std::uint64_t lhs = 0;
    std::uint64_t rhs = 0;
    bool pass = false;
    std::string error;
    std::int64_t micros = 0;
};

bool applicable(const CongruenceCheck& check, std::uint32_t p, const std::optional<Rational>& a);

/// Evaluates both sides at modulus p^k. Throws NotApplicable when the
/// predicate rejects (p, a); arithmetic contract violations propagate.
CheckResult evaluate(const CongruenceCheck& check, std::uint32_t p,
                     const std::optional<Rational>& a = std::nullopt);

/// Same, but reusing a caller-provided workspace (the scan path).
CheckResult evaluate_with(Workspace& ws, const CongruenceCheck& check,
                          const std::optional<Rational>& a_echo);

struct ScanSpec {
    std::vector<std::uint32_t> primes;
    std::vector<Rational> a_values;
    std::uint32_t random_count = 0;
    std::uint64_t seed = 0;
    std::vector<std::string> check_ids;  // empty means every check
    bool expensive = false;
    std::uint32_t jobs = 1;
};

/// Expensive checks only run for p up to this bound.
inline constexpr std::uint32_t kExpensivePrimeCap = 7;

/// Deterministic scan: one CheckResult per applicable (check, p, a)
/// triple, including random parameters derived from the seed, sorted by
/// (check id, p, a). Per-triple arithmetic errors become failed results
/// with the reason recorded.
std::vector<CheckResult> scan(const ScanSpec& spec);

/// The deterministic random parameter list scan() uses for one prime.
std::vector<Rational> random_params(std::uint32_t p, std::uint32_t count, std::uint64_t seed);

}  // namespace supercong

#endif
