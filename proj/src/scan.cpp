#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

#include "supercong/catalog.hpp"
#include "supercong/primes.hpp"

namespace supercong {

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint32_t p) {
    std::uint64_t x = seed ^ (0x9E3779B97F4A7C15ULL * (p + 1));
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

std::uint64_t next_below(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

Rational random_tail(std::mt19937_64& rng, std::uint32_t p) {
    static const int dens[] = {1, 2, 3, 4, 5, 6, 7, 8, 9, 11, 12};
    const std::int64_t span = 4 * static_cast<std::int64_t>(p) + 1;
    const std::int64_t num = static_cast<std::int64_t>(next_below(rng, span)) - 2 * p;
    int den = dens[next_below(rng, sizeof(dens) / sizeof(dens[0]))];
    while (den % static_cast<int>(p) == 0) den = dens[next_below(rng, sizeof(dens) / sizeof(dens[0]))];
    return Rational(num, den);
}

}  // namespace

std::vector<Rational> random_params(std::uint32_t p, std::uint32_t count, std::uint64_t seed) {
    std::mt19937_64 rng(mix_seed(seed, p));
    const std::uint32_t h = (p - 1) / 2;
    auto frac_lo = [&]() { return 1 + static_cast<std::uint32_t>(next_below(rng, h)); };
    auto frac_hi = [&]() { return h + 1 + static_cast<std::uint32_t>(next_below(rng, p - 1 - h)); };
    std::vector<Rational> out;
    out.reserve(count);
    const Rational pr(static_cast<long long>(p));
    for (std::uint32_t i = 0; i < count; ++i) {
        // the first four draws pin every branch split: both residue
        // classes of <a>_p crossed with the tails t == 0 and t == -1/2
        std::uint32_t frac;
        Rational t;
        if (i < 4) {
            frac = (i % 2 == 0) ? frac_lo() : frac_hi();
            t = (i < 2) ? Rational() : Rational(-1, 2);
        } else {
            frac = 1 + static_cast<std::uint32_t>(next_below(rng, p - 1));
            t = random_tail(rng, p);
        }
        out.push_back(Rational(static_cast<long long>(frac)) + pr * t);
    }
    return out;
}

namespace {

struct WorkUnit {
    std::uint32_t p;
    bool fixed;            // fixed-a sweep vs one parametric a
    std::optional<Rational> a;
};

struct UnitOutcome {
    std::vector<CheckResult> results;
};

void run_unit(const WorkUnit& unit, const std::vector<const CongruenceCheck*>& checks,
              bool expensive, UnitOutcome& out) {
    Workspace ws(unit.p, unit.a, global_tables());
    for (const CongruenceCheck* check : checks) {
        if (check->parametric == unit.fixed) continue;
        if (check->cost == CheckCost::Expensive &&
            (!expensive || unit.p > kExpensivePrimeCap))
            continue;
        if (!applicable(*check, unit.p, unit.a)) continue;
        try {
            out.results.push_back(evaluate_with(ws, *check, unit.a));
        } catch (const ArithError& e) {
            CheckResult res;
            res.check_id = check->id;
            res.p = unit.p;
            res.fixed_a = !check->parametric;
            if (check->parametric && unit.a) res.a = *unit.a;
            res.k = check->modulus_power;
            res.pass = false;
            res.error = e.what();
            out.results.push_back(std::move(res));
        }
    }
}

bool result_before(const CheckResult& x, const CheckResult& y) {
    if (x.check_id != y.check_id) return x.check_id < y.check_id;
    if (x.p != y.p) return x.p < y.p;
    if (x.fixed_a != y.fixed_a) return x.fixed_a;
    if (!x.fixed_a && x.a != y.a) return x.a < y.a;
    return false;
}

}  // namespace

std::vector<CheckResult> scan(const ScanSpec& spec) {
    std::vector<const CongruenceCheck*> checks;
    if (spec.check_ids.empty()) {
        for (const auto& c : catalog()) checks.push_back(&c);
    } else {
        for (const auto& id : spec.check_ids) {
            const CongruenceCheck* c = find_check(id);
            if (c) checks.push_back(c);
        }
    }

    bool any_param = false;
    bool any_fixed = false;
    bool any_expensive_selected = false;
    for (const CongruenceCheck* c : checks) {
        (c->parametric ? any_param : any_fixed) = true;
        if (c->cost == CheckCost::Expensive) any_expensive_selected = true;
    }

    // Warm the shared tables once, single-threaded, before fanning out.
    std::uint32_t max_p = 0;
    for (std::uint32_t p : spec.primes) max_p = std::max(max_p, p);
    if (max_p >= 5) {
        global_tables().get(SequenceKind::Bernoulli, 2 * max_p - 2);
        global_tables().get(SequenceKind::Euler, max_p - 2);
        global_tables().get(SequenceKind::U, max_p - 3);
        if (spec.expensive && any_expensive_selected) {
            for (std::uint32_t p : spec.primes)
                if (p <= kExpensivePrimeCap)
                    global_tables().get(SequenceKind::Bernoulli, p * p * (p - 1) - 1);
        }
    }

    std::vector<WorkUnit> units;
    for (std::uint32_t p : spec.primes) {
        if (p <= 3 || !is_prime(p)) continue;
        if (any_fixed) units.push_back({p, true, std::nullopt});
        if (!any_param) continue;
        for (const Rational& a : spec.a_values) {
            if (a.den().mod_u64(p) == 0) continue;  // not applicable at this prime
            units.push_back({p, false, a});
        }
        for (const Rational& a : random_params(p, spec.random_count, spec.seed))
            units.push_back({p, false, a});
    }

    std::vector<UnitOutcome> outcomes(units.size());
    const std::uint32_t jobs = std::max<std::uint32_t>(1, spec.jobs);
    if (jobs == 1 || units.size() <= 1) {
        for (std::size_t i = 0; i < units.size(); ++i)
            run_unit(units[i], checks, spec.expensive, outcomes[i]);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= units.size()) return;
                run_unit(units[i], checks, spec.expensive, outcomes[i]);
            }
        };
        std::vector<std::thread> pool;
        for (std::uint32_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::vector<CheckResult> all;
    for (auto& o : outcomes)
        for (auto& r : o.results) all.push_back(std::move(r));
    std::stable_sort(all.begin(), all.end(), result_before);
    return all;
}

}  // namespace supercong
