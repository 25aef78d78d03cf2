#include "supercong/catalog.hpp"

#include <stdexcept>

#include "supercong/primes.hpp"

namespace supercong {

Workspace::Workspace(std::uint32_t p, std::optional<Rational> a, TableCache& tables)
    : p_(p), a_(std::move(a)), tables_(tables) {}

const PadicParam& Workspace::par() {
    if (!par_) {
        if (!a_) throw std::logic_error("Workspace: parametric access without a parameter");
        par_ = decompose(*a_, p_);
    }
    return *par_;
}

bool Workspace::frac_low() { return par().frac <= half(); }

Rational Workspace::sign_frac() { return Rational(par().frac % 2 == 0 ? 1 : -1); }

const Rational& Workspace::pair(WeightKind w, bool half_range) {
    auto key = std::make_pair(static_cast<int>(w), half_range ? 1 : 0);
    auto it = pair_memo_.find(key);
    if (it == pair_memo_.end())
        it = pair_memo_.emplace(key, pair_sum(par().a, p_, w, half_range)).first;
    return it->second;
}

const Rational& Workspace::salt() {
    if (!salt_memo_) salt_memo_ = signed_alt_sum(par().a, p_);
    return *salt_memo_;
}

const Rational& Workspace::neg2(const Rational& b) {
    for (const auto& [arg, val] : neg2_memo_)
        if (arg == b) return val;
    neg2_memo_.emplace_back(b, neg2_sum(b, p_));
    return neg2_memo_.back().second;
}

const Rational& Workspace::central(CentralFamily f, WeightKind w, bool half_range) {
    auto key = std::make_tuple(static_cast<int>(f), static_cast<int>(w), half_range ? 1 : 0);
    auto it = central_memo_.find(key);
    if (it == central_memo_.end())
        it = central_memo_.emplace(key, central_sum(f, p_, w, half_range)).first;
    return it->second;
}

const Rational& Workspace::qp(int c) {
    auto it = qp_memo_.find(c);
    if (it == qp_memo_.end()) it = qp_memo_.emplace(c, fermat_quotient_exact(c, p_)).first;
    return it->second;
}

const Rational& Workspace::bern_poly_at(std::uint32_t n, const Rational& x) {
    std::string key = "B:" + std::to_string(n) + ":" + x.to_string();
    auto it = poly_memo_.find(key);
    if (it == poly_memo_.end()) {
        auto table = tables_.get(SequenceKind::Bernoulli, n);
        it = poly_memo_.emplace(key, bernoulli_poly(*table, n, x)).first;
    }
    return it->second;
}

const Rational& Workspace::bern_diff_at(std::uint32_t n, const Rational& x) {
    std::string key = "D:" + std::to_string(n) + ":" + x.to_string();
    auto it = poly_memo_.find(key);
    if (it == poly_memo_.end()) {
        auto table = tables_.get(SequenceKind::Bernoulli, n - 1);
        it = poly_memo_.emplace(key, bernoulli_poly_diff(*table, n, x)).first;
    }
    return it->second;
}

const Rational& Workspace::euler_at(std::uint32_t n, const Rational& x) {
    std::string key = "E:" + std::to_string(n) + ":" + x.to_string();
    auto it = poly_memo_.find(key);
    if (it == poly_memo_.end()) {
        auto table = tables_.get(SequenceKind::Euler, n);
        it = poly_memo_.emplace(key, euler_poly(*table, n, x)).first;
    }
    return it->second;
}

const Rational& Workspace::euler_number(std::uint32_t n) {
    std::string key = "En:" + std::to_string(n);
    auto it = poly_memo_.find(key);
    if (it == poly_memo_.end())
        it = poly_memo_.emplace(key, tables_.get(SequenceKind::Euler, n)->at(n)).first;
    return it->second;
}

const Rational& Workspace::u_number(std::uint32_t n) {
    std::string key = "Un:" + std::to_string(n);
    auto it = poly_memo_.find(key);
    if (it == poly_memo_.end())
        it = poly_memo_.emplace(key, tables_.get(SequenceKind::U, n)->at(n)).first;
    return it->second;
}

Rational Workspace::harmonic_to(std::uint32_t m) {
    if (harmonic_memo_.empty()) harmonic_memo_.push_back(Rational());
    while (harmonic_memo_.size() <= m) {
        std::uint32_t next = static_cast<std::uint32_t>(harmonic_memo_.size());
        harmonic_memo_.push_back(harmonic_memo_.back() +
                                 Rational(1, static_cast<std::int64_t>(next)));
    }
    return harmonic_memo_[m];
}

BigInt Workspace::lucas(LucasKind kind, std::uint64_t idx) { return lucas_value(kind, idx).value; }

int Workspace::legendre_sym(std::int64_t c) const { return legendre(c, p_); }

int Workspace::legendre_p_mod3() const { return legendre(static_cast<std::int64_t>(p_), 3); }

namespace {

Rational rat(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

// (-1)^e as a rational
Rational par_sign(std::uint64_t e) { return Rational(e % 2 == 0 ? 1 : -1); }

bool t_is_zero_mod_p(Workspace& w) { return reduces_to_zero(w.par().t, w.p()); }

bool t_is_minus_half_mod_p(Workspace& w) {
    return reduces_to_zero(w.par().t + rat(1, 2), w.p());
}

// p - (3/p) and p - (2/p)
std::uint64_t lucas_index(Workspace& w, int sym_arg) {
    return static_cast<std::uint64_t>(static_cast<std::int64_t>(w.p()) - w.legendre_sym(sym_arg));
}

// S_{p-(3/p)} with the divisibility-by-p assertion folded into aux checks.
BigInt s_at_p(Workspace& w) { return w.lucas(LucasKind::S, lucas_index(w, 3)); }

Rational s_over_p(Workspace& w) {
    // exact; if p did not divide S the reduce step downstream fails loudly
    return Rational(s_at_p(w), BigInt(static_cast<long long>(w.p())));
}

std::string branch_low_high(Workspace& w) {
    return w.frac_low() ? "frac<=half" : "frac>half";
}

std::function<int(Workspace&)> one_instance() {
    return [](Workspace&) { return 1; };
}

std::function<std::string(Workspace&)> no_branch() {
    return [](Workspace&) { return std::string("-"); };
}

CongruenceCheck make_fixed(std::string id, std::string description, std::string statement,
                           std::uint32_t k, std::function<Rational(Workspace&, int)> lhs,
                           std::function<Rational(Workspace&, int)> rhs) {
    CongruenceCheck c;
    c.id = std::move(id);
    c.description = std::move(description);
    c.statement = std::move(statement);
    c.modulus_power = k;
    c.parametric = false;
    c.instances = one_instance();
    c.lhs = std::move(lhs);
    c.rhs = std::move(rhs);
    c.branch = no_branch();
    return c;
}

CongruenceCheck make_param(std::string id, std::string description, std::string statement,
                           std::uint32_t k, std::function<Rational(Workspace&, int)> lhs,
                           std::function<Rational(Workspace&, int)> rhs,
                           std::function<std::string(Workspace&)> branch) {
    CongruenceCheck c;
    c.id = std::move(id);
    c.description = std::move(description);
    c.statement = std::move(statement);
    c.modulus_power = k;
    c.parametric = true;
    c.instances = one_instance();
    c.lhs = std::move(lhs);
    c.rhs = std::move(rhs);
    c.branch = std::move(branch);
    return c;
}

std::vector<CongruenceCheck> build_catalog() {
    std::vector<CongruenceCheck> cat;

    // --- full-range central sums mod p^2 ---------------------------------
    cat.push_back(make_fixed(
        "eq1.2a", "full-range central sum, family 16, vs Legendre symbol",
        "sum(k=0..p-1) C(2k,k)^2/16^k == (-1/p)  (mod p^2)", 2,
        [](Workspace& w, int) { return w.central(CentralFamily::F16, WeightKind::One, false); },
        [](Workspace& w, int) { return rat(w.legendre_sym(-1)); }));
    cat.push_back(make_fixed(
        "eq1.2b", "full-range central sum, family 27, vs Legendre symbol",
        "sum(k=0..p-1) C(2k,k)C(3k,k)/27^k == (-3/p)  (mod p^2)", 2,
        [](Workspace& w, int) { return w.central(CentralFamily::F27, WeightKind::One, false); },
        [](Workspace& w, int) { return rat(w.legendre_sym(-3)); }));
    cat.push_back(make_fixed(
        "eq1.3a", "full-range central sum, family 64, vs Legendre symbol",
        "sum(k=0..p-1) C(2k,k)C(4k,2k)/64^k == (-2/p)  (mod p^2)", 2,
        [](Workspace& w, int) { return w.central(CentralFamily::F64, WeightKind::One, false); },
        [](Workspace& w, int) { return rat(w.legendre_sym(-2)); }));
    cat.push_back(make_fixed(
        "eq1.3b", "full-range central sum, family 432, vs Legendre symbol",
        "sum(k=0..p-1) C(3k,k)C(6k,3k)/432^k == (-1/p)  (mod p^2)", 2,
        [](Workspace& w, int) { return w.central(CentralFamily::F432, WeightKind::One, false); },
        [](Workspace& w, int) { return rat(w.legendre_sym(-1)); }));

    // --- full-range pair sums mod p^3 -------------------------------------
    cat.push_back(make_param(
        "eq1.4", "full-range pair sum vs Euler polynomial tail",
        "sum(k=0..p-1) C(a,k)C(-1-a,k) == (-1)^<a> + p^2 t(t+1) E_{p-3}(-a)  (mod p^3)", 3,
        [](Workspace& w, int) { return w.pair(WeightKind::One, false); },
        [](Workspace& w, int) {
            const auto& pr = w.par();
            return w.sign_frac() + w.p_rat() * w.p_rat() * pr.t * (pr.t + rat(1)) *
                                       w.euler_at(w.p() - 3, -pr.a);
        },
        no_branch()));
    cat.push_back(make_param(
        "eq1.5", "k-weighted full-range pair sum vs Euler polynomial tail",
        "sum(k=0..p-1) k C(a,k)C(-1-a,k) == (-1)^<a> a(a+1) + p^2 t(t+1)(a(a+1)E_{p-3}(-a)-1)  "
        "(mod p^3)",
        3, [](Workspace& w, int) { return w.pair(WeightKind::K, false); },
        [](Workspace& w, int) {
            const auto& pr = w.par();
            const Rational aa1 = pr.a * (pr.a + rat(1));
            return w.sign_frac() * aa1 +
                   w.p_rat() * w.p_rat() * pr.t * (pr.t + rat(1)) *
                       (aa1 * w.euler_at(w.p() - 3, -pr.a) - rat(1));
        },
        no_branch()));
    cat.push_back(make_param(
        "eq1.6", "1/(2k-1)-weighted full-range pair sum vs Bernoulli polynomial tail",
        "sum(k=0..p-1) C(a,k)C(-1-a,k)/(2k-1) == -(2a+1)(2t+1) - p^2 t(t+1)(4+(2a+1)B_{p-2}(-a))  "
        "(mod p^3)",
        3, [](Workspace& w, int) { return w.pair(WeightKind::Inv2kMinus1, false); },
        [](Workspace& w, int) {
            const auto& pr = w.par();
            const Rational b = w.bern_poly_at(w.p() - 2, -pr.a);
            return -(rat(2) * pr.a + rat(1)) * (rat(2) * pr.t + rat(1)) -
                   w.p_rat() * w.p_rat() * pr.t * (pr.t + rat(1)) *
                       (rat(4) + (rat(2) * pr.a + rat(1)) * b);
        },
        no_branch()));
    cat.push_back(make_param(
        "eq1.7", "(2a+1)/(2k+1)-weighted full-range pair sum vs Bernoulli polynomial tail",
        "sum(k=0..p-1) C(a,k)C(-1-a,k)(2a+1)/(2k+1) == 1 + 2t + p^2 t(t+1) B_{p-2}(-a)  (mod p^3)",
        3,
        [](Workspace& w, int) {
            return (rat(2) * w.par().a + rat(1)) * w.pair(WeightKind::Inv2kPlus1, false);
        },
        [](Workspace& w, int) {
            const auto& pr = w.par();
            return rat(1) + rat(2) * pr.t +
                   w.p_rat() * w.p_rat() * pr.t * (pr.t + rat(1)) * w.bern_poly_at(w.p() - 2, -pr.a);
        },
        no_branch()));
    {
        CongruenceCheck c = make_param(
            "eq1.8", "1/k-weighted full-range pair sum vs high-index Bernoulli difference",
            "sum(k=1..p-1) C(a,k)C(-1-a,k)/k == -(2/3)p^2 t(t+1) B_{p-3}(-a) "
            "- 2(B_N(-a)-B_N)/N, N = p^2(p-1)  (mod p^3)",
            3, [](Workspace& w, int) { return w.pair(WeightKind::InvK, false); },
            [](Workspace& w, int) {
                const auto& pr = w.par();
                const std::uint32_t n = w.p() * w.p() * (w.p() - 1);
                const Rational big = w.bern_diff_at(n, -pr.a) / rat(static_cast<std::int64_t>(n));
                return rat(-2, 3) * w.p_rat() * w.p_rat() * pr.t * (pr.t + rat(1)) *
                           w.bern_poly_at(w.p() - 3, -pr.a) -
                       rat(2) * big;
            },
            no_branch());
        c.cost = CheckCost::Expensive;
        cat.push_back(std::move(c));
    }
    cat.push_back(make_param(
        "eq1.9", "binomial transform with weight (-2)^k vs Euler polynomial",
        "sum(k=0..p-1) C(a,k)(-2)^k == (-1)^<a> - p t E_{p-2}(-a)  (mod p^2)", 2,
        [](Workspace& w, int) { return w.neg2(w.par().a); },
        [](Workspace& w, int) {
            const auto& pr = w.par();
            return w.sign_frac() - w.p_rat() * pr.t * w.euler_at(w.p() - 2, -pr.a);
        },
        no_branch()));
    {
        CongruenceCheck c = make_param(
            "eq1.10", "alternating 1/k-weighted binomial sum vs high-index Bernoulli difference",
            "sum(k=1..p-1) (-1)^{k-1} C(a,k)/k == (B_N(-a)-B_N)/N - ((a-<a>)/2) B_{p-2}(-a), "
            "N = p^2(p-1)  (mod p^2)",
            2, [](Workspace& w, int) { return w.salt(); },
            [](Workspace& w, int) {
                const auto& pr = w.par();
                const std::uint32_t n = w.p() * w.p() * (w.p() - 1);
                const Rational big = w.bern_diff_at(n, -pr.a) / rat(static_cast<std::int64_t>(n));
                return big - (pr.a - rat(pr.frac)) / rat(2) * w.bern_poly_at(w.p() - 2, -pr.a);
            },
            no_branch());
        c.cost = CheckCost::Expensive;
        cat.push_back(std::move(c));
    }

    // --- weighted half-range central sums, family 64 ----------------------
    cat.push_back(make_fixed(
        "eq1.12", "1/(2k-1)-weighted half-range central sum, family 64",
        "sum(k=0..(p-1)/2) C(2k,k)C(4k,2k)/((2k-1)64^k) == (-1)^{(p+1)/2} (p+1)/2  (mod p^2)", 2,
        [](Workspace& w, int) { return w.central(CentralFamily::F64, WeightKind::Inv2kMinus1, true); },
        [](Workspace& w, int) {
            return par_sign((w.p() + 1) / 2) * rat(static_cast<std::int64_t>(w.p()) + 1, 2);
        }));
    cat.push_back(make_fixed(
        "eq1.13", "1/k-weighted half-range central sum, family 64",
        "sum(k=1..(p-1)/2) C(2k,k)C(4k,2k)/(k 64^k) == 6q_p(2) - p(3q_p(2)^2 + "
        "2(-1)^{(p-1)/2}E_{p-3})  (mod p^2)",
        2,
        [](Workspace& w, int) { return w.central(CentralFamily::F64, WeightKind::InvK, true); },
        [](Workspace& w, int) {
            const Rational q2 = w.qp(2);
            return rat(6) * q2 - w.p_rat() * (rat(3) * q2 * q2 + rat(2) * par_sign((w.p() - 1) / 2) *
                                                                    w.euler_number(w.p() - 3));
        }));
    cat.push_back(make_fixed(
        "eq1.14", "half-range central sum, family 64, vs Pell numbers",
        "sum(k=0..(p-1)/2) C(2k,k)C(4k,2k)/64^k == (-1)^{[p/4]}(1 + P_{p-(2/p)})  (mod p^2)", 2,
        [](Workspace& w, int) { return w.central(CentralFamily::F64, WeightKind::One, true); },
        [](Workspace& w, int) {
            return par_sign(w.p() / 4) *
                   (rat(1) + Rational(w.lucas(LucasKind::Pell, lucas_index(w, 2))));
        }));

    // --- 1/k-weighted half sums and the alternating transform -------------
    {
        CongruenceCheck c;
        c.id = "lem2.1";
        c.description = "half-range binomial product expansion, both residue classes of r";
        c.statement =
            "C(pt+r-1,(p-1)/2) C(-pt-r-1,(p-1)/2) == pt'/r + (p^2 t'/r)(2q_p(2)+H) - p^2 t t'/r^2, "
            "t' = t or t+1, H = H_{(p-1)/2-r} or H_{r-(p+1)/2}  (mod p^3)";
        c.modulus_power = 3;
        c.parametric = true;
        c.instances = [](Workspace& w) { return static_cast<int>(w.p() - 1); };
        c.lhs = [](Workspace& w, int inst) {
            const std::uint32_t r = static_cast<std::uint32_t>(inst) + 1;
            const Rational pt = w.par().a - rat(w.par().frac);  // p*t exactly
            const Rational arg = pt + rat(r);
            return binom(arg - rat(1), w.half()) * binom(-arg - rat(1), w.half());
        };
        c.rhs = [](Workspace& w, int inst) {
            const std::uint32_t r = static_cast<std::uint32_t>(inst) + 1;
            const Rational t = w.par().t;
            const Rational rr = rat(r);
            const Rational q2 = w.qp(2);
            if (2 * r < w.p()) {
                const Rational h = w.harmonic_to(w.half() - r);
                return w.p_rat() * t / rr +
                       w.p_rat() * w.p_rat() * t / rr * (rat(2) * q2 + h) -
                       w.p_rat() * w.p_rat() * t * t / (rr * rr);
            }
            const Rational t1 = t + rat(1);
            const Rational h = w.harmonic_to(r - (w.p() + 1) / 2);
            return w.p_rat() * t1 / rr + w.p_rat() * w.p_rat() * t1 / rr * (rat(2) * q2 + h) -
                   w.p_rat() * w.p_rat() * t * t1 / (rr * rr);
        };
        c.branch = [](Workspace&) { return std::string("r<p/2,r>p/2"); };
        cat.push_back(std::move(c));
    }
    cat.push_back(make_param(
        "thm2.1a", "combined 1/k half sum and alternating sum vs 0 or p B_{p-2}(-a)",
        "sum(k=1..(p-1)/2) C(a,k)C(-1-a,k)/k + 2 sum(k=1..p-1) (-1)^{k-1}C(a,k)/k == 0 or "
        "p B_{p-2}(-a)  (mod p^2)",
        2,
        [](Workspace& w, int) { return w.pair(WeightKind::InvK, true) + rat(2) * w.salt(); },
        [](Workspace& w, int) {
            if (w.frac_low()) return Rational();
            return w.p_rat() * w.bern_poly_at(w.p() - 2, -w.par().a);
        },
        branch_low_high));
    cat.push_back(make_param(
        "thm2.1b", "alternating 1/k-weighted binomial sum vs Bernoulli differences",
        "sum(k=1..p-1) (-1)^{k-1}C(a,k)/k == -(B_{2p-2}(-a)-B_{2p-2})/(2p-2) "
        "+ 2(B_{p-1}(-a)-B_{p-1})/(p-1) - ((a-<a>)/2) B_{p-2}(-a)  (mod p^2)",
        2, [](Workspace& w, int) { return w.salt(); },
        [](Workspace& w, int) {
            const auto& pr = w.par();
            const Rational d2 = w.bern_diff_at(2 * w.p() - 2, -pr.a);
            const Rational d1 = w.bern_diff_at(w.p() - 1, -pr.a);
            return -d2 / rat(2 * static_cast<std::int64_t>(w.p()) - 2) +
                   rat(2) * d1 / rat(static_cast<std::int64_t>(w.p()) - 1) -
                   (pr.a - rat(pr.frac)) / rat(2) * w.bern_poly_at(w.p() - 2, -pr.a);
        },
        no_branch()));
    cat.push_back(make_fixed(
        "thm2.2i", "1/k-weighted half-range central sum, family 64",
        "sum(k=1..(p-1)/2) C(2k,k)C(4k,2k)/(k 64^k) == 6q_p(2) - p(3q_p(2)^2 + "
        "2(-1)^{(p-1)/2}E_{p-3})  (mod p^2)",
        2,
        [](Workspace& w, int) { return w.central(CentralFamily::F64, WeightKind::InvK, true); },
        [](Workspace& w, int) {
            const Rational q2 = w.qp(2);
            return rat(6) * q2 - w.p_rat() * (rat(3) * q2 * q2 + rat(2) * par_sign((w.p() - 1) / 2) *
                                                                    w.euler_number(w.p() - 3));
        }));
    cat.push_back(make_fixed(
        "thm2.2ii", "1/k-weighted half-range central sum, family 27",
        "sum(k=1..(p-1)/2) C(2k,k)C(3k,k)/(k 27^k) == 3q_p(3) - p((3/2)q_p(3)^2 + 2(p/3)U_{p-3})  "
        "(mod p^2)",
        2,
        [](Workspace& w, int) { return w.central(CentralFamily::F27, WeightKind::InvK, true); },
        [](Workspace& w, int) {
            const Rational q3 = w.qp(3);
            return rat(3) * q3 - w.p_rat() * (rat(3, 2) * q3 * q3 +
                                              rat(2 * w.legendre_p_mod3()) * w.u_number(w.p() - 3));
        }));
    cat.push_back(make_fixed(
        "thm2.2iii", "1/k-weighted half-range central sum, family 432",
        "sum(k=1..(p-1)/2) C(3k,k)C(6k,3k)/(k 432^k) == 4q_p(2) + 3q_p(3) "
        "- p(2q_p(2)^2 + (3/2)q_p(3)^2 + 5(p/3)U_{p-3})  (mod p^2)",
        2,
        [](Workspace& w, int) { return w.central(CentralFamily::F432, WeightKind::InvK, true); },
        [](Workspace& w, int) {
            const Rational q2 = w.qp(2);
            const Rational q3 = w.qp(3);
            return rat(4) * q2 + rat(3) * q3 -
                   w.p_rat() * (rat(2) * q2 * q2 + rat(3, 2) * q3 * q3 +
                                rat(5 * w.legendre_p_mod3()) * w.u_number(w.p() - 3));
        }));

    // --- plain and k-weighted half sums ------------------------------------
    cat.push_back(make_param(
        "lem3.1", "half-range pair sum vs harmonic correction with delta terms",
        "sum(k=0..(p-1)/2) C(a,k)C(-1-a,k) == (-1)^<a>(1 - p t H_{(p-1)/2}) "
        "+ 2p sum(k=0..<a>-1) (-1)^k (t+delta_k)/(<a>-k)  (mod p^2)",
        2, [](Workspace& w, int) { return w.pair(WeightKind::One, true); },
        [](Workspace& w, int) {
            const auto& pr = w.par();
            Rational corr;
            for (std::uint32_t j = 0; j < pr.frac; ++j) {
                const std::uint32_t r = pr.frac - j;
                Rational delta = rat(r > w.half() ? 1 : 0);
                Rational term = (pr.t + delta) / rat(r);
                corr += (j % 2 == 0) ? term : -term;
            }
            return w.sign_frac() * (rat(1) - w.p_rat() * pr.t * w.harmonic_to(w.half())) +
                   rat(2) * w.p_rat() * corr;
        },
        no_branch()));
    cat.push_back(make_param(
        "eq3.1", "half-range pair sum vs Euler polynomial, two residue classes of <a>",
        "sum(k=0..(p-1)/2) C(a,k)C(-1-a,k) == (-1)^<a> - p t' E_{p-2}(-a), t' = t or t+1  "
        "(mod p^2)",
        2, [](Workspace& w, int) { return w.pair(WeightKind::One, true); },
        [](Workspace& w, int) {
            const auto& pr = w.par();
            const Rational tp = w.frac_low() ? pr.t : pr.t + rat(1);
            return w.sign_frac() - w.p_rat() * tp * w.euler_at(w.p() - 2, -pr.a);
        },
        branch_low_high));
    cat.push_back(make_param(
        "thm3.1", "half-range pair sum vs (-2)^k binomial transform, three branches",
        "sum(k=0..(p-1)/2) C(a,k)C(-1-a,k) == T, T = sum C(a,k)(-2)^k | (1+1/t)T - (-1)^<a>/t | "
        "(-1)^<a> - p E_{p-2}(-a)  (mod p^2)",
        2, [](Workspace& w, int) { return w.pair(WeightKind::One, true); },
        [](Workspace& w, int) {
            const auto& pr = w.par();
            if (w.frac_low()) return w.neg2(pr.a);
            if (!t_is_zero_mod_p(w)) {
                return (rat(1) + pr.t.inverse()) * w.neg2(pr.a) - w.sign_frac() * pr.t.inverse();
            }
            return w.sign_frac() - w.p_rat() * w.euler_at(w.p() - 2, -pr.a);
        },
        [](Workspace& w) {
            if (w.frac_low()) return std::string("frac<=half");
            return t_is_zero_mod_p(w) ? std::string("frac>half,t==0") : std::string("frac>half,t!=0");
        }));
    cat.push_back(make_fixed(
        "thm3.2", "half-range central sum, family 64, vs Pell numbers",
        "sum(k=0..(p-1)/2) C(2k,k)C(4k,2k)/64^k == (-1)^{[p/4]}(1 + P_{p-(2/p)})  (mod p^2)", 2,
        [](Workspace& w, int) { return w.central(CentralFamily::F64, WeightKind::One, true); },
        [](Workspace& w, int) {
            return par_sign(w.p() / 4) *
                   (rat(1) + Rational(w.lucas(LucasKind::Pell, lucas_index(w, 2))));
        }));
    cat.push_back(make_fixed(
        "thm3.3", "half-range central sum, family 432, vs the S sequence",
        "sum(k=0..(p-1)/2) C(3k,k)C(6k,3k)/432^k == (-1)^{(p-1)/2}(1 + (3/p) S_{p-(3/p)})  "
        "(mod p^2)",
        2,
        [](Workspace& w, int) { return w.central(CentralFamily::F432, WeightKind::One, true); },
        [](Workspace& w, int) {
            return par_sign((w.p() - 1) / 2) *
                   (rat(1) + rat(w.legendre_sym(3)) * Rational(s_at_p(w)));
        }));
    cat.push_back(make_param(
        "thm3.4", "k-weighted half-range pair sum, two residue classes of <a>",
        "sum(k=0..(p-1)/2) k C(a,k)C(-1-a,k) == (-1)^<a> a(a+1) "
        "- (1/2) p t' (2a(a+1)E_{p-2}(-a) + 2a+1), t' = t or t+1  (mod p^2)",
        2, [](Workspace& w, int) { return w.pair(WeightKind::K, true); },
        [](Workspace& w, int) {
            const auto& pr = w.par();
            const Rational tp = w.frac_low() ? pr.t : pr.t + rat(1);
            const Rational aa1 = pr.a * (pr.a + rat(1));
            return w.sign_frac() * aa1 -
                   rat(1, 2) * w.p_rat() * tp *
                       (rat(2) * aa1 * w.euler_at(w.p() - 2, -pr.a) + rat(2) * pr.a + rat(1));
        },
        branch_low_high));
    cat.push_back(make_fixed(
        "thm3.5", "k-weighted half-range central sum, family 27",
        "sum(k=0..(p-1)/2) k C(2k,k)C(3k,k)/27^k == -(p/3)(4 - 3p + 2^{p+2})/54  (mod p^2)", 2,
        [](Workspace& w, int) { return w.central(CentralFamily::F27, WeightKind::K, true); },
        [](Workspace& w, int) {
            const Rational inner =
                rat(4) - rat(3) * w.p_rat() + Rational(w.pow2(w.p() + 2));
            return rat(-w.legendre_p_mod3()) * inner / rat(54);
        }));

    // --- 1/(2k+1)- and 1/(2k-1)-weighted half sums --------------------------
    cat.push_back(make_param(
        "lem4.1", "(2a+1)/(2k+1)-weighted half-range pair sum vs harmonic tail",
        "sum(k=0..(p-1)/2) C(a,k)C(-1-a,k)(2a+1)/(2k+1) == 1 + 2t + 4ptq_p(2) "
        "+ 2pt H_{<a>} + 2p sum(p/2<r<=<a>) 1/r  (mod p^2)",
        2,
        [](Workspace& w, int) {
            return (rat(2) * w.par().a + rat(1)) * w.pair(WeightKind::Inv2kPlus1, true);
        },
        [](Workspace& w, int) {
            const auto& pr = w.par();
            Rational tail;  // sum of 1/r over p/2 < r <= <a>
            if (pr.frac > w.half()) tail = w.harmonic_to(pr.frac) - w.harmonic_to(w.half());
            return rat(1) + rat(2) * pr.t + rat(4) * w.p_rat() * pr.t * w.qp(2) +
                   rat(2) * w.p_rat() * pr.t * w.harmonic_to(pr.frac) +
                   rat(2) * w.p_rat() * tail;
        },
        no_branch()));
    cat.push_back(make_param(
        "thm4.1", "(2a+1)/(2k+1)-weighted half-range pair sum vs Bernoulli difference",
        "sum(k=0..(p-1)/2) C(a,k)C(-1-a,k)(2a+1)/(2k+1) == 1 + 2t + 4pt'q_p(2) "
        "- 2pt'(B_{p-1}(-a)-B_{p-1}), t' = t or t+1  (mod p^2)",
        2,
        [](Workspace& w, int) {
            return (rat(2) * w.par().a + rat(1)) * w.pair(WeightKind::Inv2kPlus1, true);
        },
        [](Workspace& w, int) {
            const auto& pr = w.par();
            const Rational tp = w.frac_low() ? pr.t : pr.t + rat(1);
            return rat(1) + rat(2) * pr.t + rat(4) * w.p_rat() * tp * w.qp(2) -
                   rat(2) * w.p_rat() * tp * w.bern_diff_at(w.p() - 1, -pr.a);
        },
        branch_low_high));
    cat.push_back(make_fixed(
        "cor4.1", "1/(2k+1)-weighted half-range central sum, family 27",
        "sum(k=0..(p-1)/2) C(2k,k)C(3k,k)/((2k+1)27^k) == (p/3)(2 - 2^{p+1} + 3^p)  (mod p^2)", 2,
        [](Workspace& w, int) { return w.central(CentralFamily::F27, WeightKind::Inv2kPlus1, true); },
        [](Workspace& w, int) {
            const Rational inner = rat(2) - Rational(w.pow2(w.p() + 1)) +
                                   Rational(BigInt::pow(BigInt(3), w.p()));
            return rat(w.legendre_p_mod3()) * inner;
        }));
    cat.push_back(make_param(
        "thm4.2", "1/(2k-1)-weighted half-range pair sum vs E_{p-2}(-2a), two branches",
        "sum(k=0..(p-1)/2) C(a,k)C(-1-a,k)/(2k-1) == -(2a+1) + 2(a-<a>)(1+(2a+1)E_{p-2}(-2a)) | "
        "2a+1 + 2(p+a-<a>)(1+(2a+1)E_{p-2}(-2a))  (mod p^2)",
        2, [](Workspace& w, int) { return w.pair(WeightKind::Inv2kMinus1, true); },
        [](Workspace& w, int) {
            const auto& pr = w.par();
            const Rational two_a1 = rat(2) * pr.a + rat(1);
            const Rational e = w.euler_at(w.p() - 2, rat(-2) * pr.a);
            const Rational pt = pr.a - rat(pr.frac);
            if (w.frac_low()) return -two_a1 + rat(2) * pt * (rat(1) + two_a1 * e);
            return two_a1 + rat(2) * (w.p_rat() + pt) * (rat(1) + two_a1 * e);
        },
        [](Workspace& w) {
            return w.frac_low() ? std::string("frac<p/2") : std::string("frac>p/2");
        }));
    cat.push_back(make_fixed(
        "thm4.3i", "1/(2k-1)-weighted half-range central sum, family 64",
        "sum(k=0..(p-1)/2) C(2k,k)C(4k,2k)/((2k-1)64^k) == (-1)^{(p+1)/2}(p+1)/2  (mod p^2)", 2,
        [](Workspace& w, int) { return w.central(CentralFamily::F64, WeightKind::Inv2kMinus1, true); },
        [](Workspace& w, int) {
            return par_sign((w.p() + 1) / 2) * rat(static_cast<std::int64_t>(w.p()) + 1, 2);
        }));
    cat.push_back(make_fixed(
        "thm4.3ii", "1/(2k-1)-weighted half-range central sum, family 27",
        "sum(k=0..(p-1)/2) C(2k,k)C(3k,k)/((2k-1)27^k) == (1/9)(p/3)(2^{p+1} - 7 - 6p)  (mod p^2)",
        2,
        [](Workspace& w, int) { return w.central(CentralFamily::F27, WeightKind::Inv2kMinus1, true); },
        [](Workspace& w, int) {
            const Rational inner =
                Rational(w.pow2(w.p() + 1)) - rat(7) - rat(6) * w.p_rat();
            return rat(w.legendre_p_mod3(), 9) * inner;
        }));
    cat.push_back(make_fixed(
        "thm4.3iii", "1/(2k-1)-weighted half-range central sum, family 432",
        "sum(k=0..(p-1)/2) C(3k,k)C(6k,3k)/((2k-1)432^k) == -(1/9)(p/3)(2^{p+1} + 2 + 3p)  "
        "(mod p^2)",
        2,
        [](Workspace& w, int) {
            return w.central(CentralFamily::F432, WeightKind::Inv2kMinus1, true);
        },
        [](Workspace& w, int) {
            const Rational inner =
                Rational(w.pow2(w.p() + 1)) + rat(2) + rat(3) * w.p_rat();
            return rat(-w.legendre_p_mod3(), 9) * inner;
        }));
    cat.push_back(make_param(
        "thm4.4", "1/(2k-1)-weighted half-range pair sum vs (-2)^k transform of 2a, three branches",
        "sum(k=0..(p-1)/2) C(a,k)C(-1-a,k)/(2k-1) == 2pt - (2a+1)T | 2p(t+1) - (2a+1)/(2t+1) "
        "- (2a+1)(1+1/(2t+1))T | 2a+1 + p(1+(2a+1)E_{p-2}(-2a)), T = sum C(2a,k)(-2)^k  (mod p^2)",
        2, [](Workspace& w, int) { return w.pair(WeightKind::Inv2kMinus1, true); },
        [](Workspace& w, int) {
            const auto& pr = w.par();
            const Rational two_a1 = rat(2) * pr.a + rat(1);
            if (w.frac_low())
                return rat(2) * w.p_rat() * pr.t - two_a1 * w.neg2(rat(2) * pr.a);
            if (!t_is_minus_half_mod_p(w)) {
                const Rational inv2t1 = (rat(2) * pr.t + rat(1)).inverse();
                return rat(2) * w.p_rat() * (pr.t + rat(1)) - two_a1 * inv2t1 -
                       two_a1 * (rat(1) + inv2t1) * w.neg2(rat(2) * pr.a);
            }
            return two_a1 +
                   w.p_rat() * (rat(1) + two_a1 * w.euler_at(w.p() - 2, rat(-2) * pr.a));
        },
        [](Workspace& w) {
            if (w.frac_low()) return std::string("frac<p/2");
            return t_is_minus_half_mod_p(w) ? std::string("frac>p/2,t==-1/2")
                                            : std::string("frac>p/2,t!=-1/2");
        }));

    // --- auxiliary mod-p facts --------------------------------------------
    {
        CongruenceCheck c = make_fixed(
            "aux3.3", "Bernoulli differences at 1/2 and 1/3 vs Fermat quotients",
            "B_{p-1}(1/2)-B_{p-1} == 2q_p(2); B_{p-1}(1/3)-B_{p-1} == (3/2)q_p(3)  (mod p)", 1,
            [](Workspace& w, int inst) {
                return w.bern_diff_at(w.p() - 1, inst == 0 ? rat(1, 2) : rat(1, 3));
            },
            [](Workspace& w, int inst) {
                return inst == 0 ? rat(2) * w.qp(2) : rat(3, 2) * w.qp(3);
            });
        c.instances = [](Workspace&) { return 2; };
        cat.push_back(std::move(c));
    }
    cat.push_back(make_fixed(
        "aux3.4", "Bernoulli difference at 1/4 vs Fermat quotient",
        "B_{p-1}(1/4)-B_{p-1} == 3q_p(2)  (mod p)", 1,
        [](Workspace& w, int) { return w.bern_diff_at(w.p() - 1, rat(1, 4)); },
        [](Workspace& w, int) { return rat(3) * w.qp(2); }));
    cat.push_back(make_fixed(
        "aux3.5", "Bernoulli difference at 1/6 vs Fermat quotients",
        "B_{p-1}(1/6)-B_{p-1} == 2q_p(2) + (3/2)q_p(3)  (mod p)", 1,
        [](Workspace& w, int) { return w.bern_diff_at(w.p() - 1, rat(1, 6)); },
        [](Workspace& w, int) { return rat(2) * w.qp(2) + rat(3, 2) * w.qp(3); }));
    {
        CongruenceCheck c = make_fixed(
            "aux3.6", "Bernoulli difference at 1/12 vs S sequence and Fermat quotients",
            "p | S_{p-(3/p)}; B_{p-1}(1/12)-B_{p-1} == 3S_{p-(3/p)}/p + 3q_p(2) + (3/2)q_p(3)  "
            "(mod p)",
            1,
            [](Workspace& w, int inst) {
                if (inst == 0) return Rational(s_at_p(w));  // divisibility gate
                return w.bern_diff_at(w.p() - 1, rat(1, 12));
            },
            [](Workspace& w, int inst) {
                if (inst == 0) return Rational();
                return rat(3) * s_over_p(w) + rat(3) * w.qp(2) + rat(3, 2) * w.qp(3);
            });
        c.instances = [](Workspace&) { return 2; };
        cat.push_back(std::move(c));
    }
    {
        CongruenceCheck c = make_fixed(
            "aux3.9", "Euler polynomial at 1/6 vs S sequence",
            "p | S_{p-(3/p)}; E_{p-2}(1/6) == 6S_{p-(3/p)}/p  (mod p)", 1,
            [](Workspace& w, int inst) {
                if (inst == 0) return Rational(s_at_p(w));
                return w.euler_at(w.p() - 2, rat(1, 6));
            },
            [](Workspace& w, int inst) {
                if (inst == 0) return Rational();
                return rat(6) * s_over_p(w);
            });
        c.instances = [](Workspace&) { return 2; };
        cat.push_back(std::move(c));
    }
    cat.push_back(make_fixed(
        "aux3.10", "Euler polynomial at 1/3 vs Fermat quotient",
        "E_{p-2}(1/3) == 2q_p(2)  (mod p)", 1,
        [](Workspace& w, int) { return w.euler_at(w.p() - 2, rat(1, 3)); },
        [](Workspace& w, int) { return rat(2) * w.qp(2); }));
    cat.push_back(make_param(
        "aux4.1", "harmonic prefix vs Bernoulli difference",
        "sum(r=1..<a>) 1/r == -(B_{p-1}(-a)-B_{p-1})  (mod p)", 1,
        [](Workspace& w, int) { return w.harmonic_to(w.par().frac); },
        [](Workspace& w, int) { return -w.bern_diff_at(w.p() - 1, -w.par().a); },
        no_branch()));
    cat.push_back(make_param(
        "aux4.3", "Euler polynomial at -2a vs Bernoulli difference gap",
        "E_{p-2}(-2a) == B_{p-1}(-a) - B_{p-1}(1/2-a)  (mod p)", 1,
        [](Workspace& w, int) { return w.euler_at(w.p() - 2, rat(-2) * w.par().a); },
        [](Workspace& w, int) {
            const auto& pr = w.par();
            return w.bern_diff_at(w.p() - 1, -pr.a) - w.bern_diff_at(w.p() - 1, rat(1, 2) - pr.a);
        },
        no_branch()));
    {
        CongruenceCheck c = make_fixed(
            "auxH", "harmonic numbers at (p-1)/2 and [p/4] vs q_p(2)",
            "H_{(p-1)/2} == -2q_p(2); H_{[p/4]} == -3q_p(2)  (mod p)", 1,
            [](Workspace& w, int inst) {
                return w.harmonic_to(inst == 0 ? w.half() : w.p() / 4);
            },
            [](Workspace& w, int inst) {
                return inst == 0 ? rat(-2) * w.qp(2) : rat(-3) * w.qp(2);
            });
        c.instances = [](Workspace&) { return 2; };
        cat.push_back(std::move(c));
    }

    return cat;
}

}  // namespace

const std::vector<CongruenceCheck>& catalog() {
    static const std::vector<CongruenceCheck> cat = build_catalog();
    return cat;
}

const CongruenceCheck* find_check(std::string_view id) {
    for (const auto& c : catalog())
        if (c.id == id) return &c;
    return nullptr;
}

bool applicable(const CongruenceCheck& check, std::uint32_t p, const std::optional<Rational>& a) {
    if (p <= 3 || !is_prime(p)) return false;
    if (!check.parametric) return true;
    if (!a) return false;
    if (a->den().mod_u64(p) == 0) return false;
    if (a->num().mod_u64(p) == 0) return false;  // a == 0 (mod p) is excluded everywhere
    return true;
}

CheckResult evaluate_with(Workspace& ws, const CongruenceCheck& check,
                          const std::optional<Rational>& a_echo) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckResult res;
    res.check_id = check.id;
    res.p = ws.p();
    res.fixed_a = !check.parametric;
    if (check.parametric && a_echo) res.a = *a_echo;
    res.k = check.modulus_power;
    res.branch = check.branch(ws);
    const int n_inst = check.instances(ws);
    res.pass = true;
    for (int i = 0; i < n_inst; ++i) {
        const Residue l = reduce(check.lhs(ws, i), ws.p(), check.modulus_power);
        const Residue r = reduce(check.rhs(ws, i), ws.p(), check.modulus_power);
        res.lhs = l.value();
        res.rhs = r.value();
        if (l.value() != r.value()) {
            res.pass = false;
            break;
        }
    }
    res.micros = std::chrono::duration_cast<std::chrono::microseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
    return res;
}

CheckResult evaluate(const CongruenceCheck& check, std::uint32_t p,
                     const std::optional<Rational>& a) {
    if (!applicable(check, p, a))
        throw NotApplicable("check " + check.id + " not applicable at p = " + std::to_string(p) +
                            (a ? ", a = " + a->to_string() : std::string(", no parameter")));
    Workspace ws(p, check.parametric ? a : std::nullopt, global_tables());
    return evaluate_with(ws, check, a);
}

}  // namespace supercong
