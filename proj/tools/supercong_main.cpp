#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "supercong/catalog.hpp"
#include "supercong/primes.hpp"
#include "supercong/report.hpp"

namespace {

using namespace supercong;

int config_error(const std::string& flag, const std::string& message) {
    std::cerr << "error: " << flag << ": " << message << "\n";
    return 2;
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, ',')) out.push_back(cur);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"scans a catalog of binomial-sum congruences modulo prime powers"};

    std::string primes_range, prime_list, a_list, checks = "all", format = "table", out_path;
    std::uint32_t random_count = 0;
    std::uint64_t seed = 0;
    std::uint32_t jobs = 1;
    bool expensive = false;

    app.add_option("--primes", primes_range, "inclusive prime range lo..hi (non-primes skipped)");
    app.add_option("--prime-list", prime_list, "explicit comma-separated primes");
    app.add_option("--a", a_list, "comma-separated rational parameters num/den");
    app.add_option("--random", random_count, "random parameters per prime");
    app.add_option("--seed", seed, "seed for the random parameters");
    app.add_option("--checks", checks, "comma-separated check ids, or 'all'");
    app.add_flag("--expensive", expensive, "enable the expensive checks (p <= 7)");
    app.add_option("--jobs", jobs, "worker count");
    app.add_option("--format", format, "table | json | csv");
    app.add_option("--out", out_path, "write the report to this path instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    ScanSpec spec;
    ReportConfig cfg;

    if (primes_range.empty() && prime_list.empty())
        return config_error("--primes", "one of --primes or --prime-list is required");
    if (!primes_range.empty() && !prime_list.empty())
        return config_error("--prime-list", "cannot combine with --primes");

    if (!primes_range.empty()) {
        const auto dots = primes_range.find("..");
        if (dots == std::string::npos)
            return config_error("--primes", "expected lo..hi, got '" + primes_range + "'");
        try {
            const long lo = std::stol(primes_range.substr(0, dots));
            const long hi = std::stol(primes_range.substr(dots + 2));
            if (lo < 5)
                return config_error("--primes", "range must start at 5 or above, got " +
                                                    std::to_string(lo));
            if (hi < lo) return config_error("--primes", "empty range '" + primes_range + "'");
            spec.primes = primes_in_range(static_cast<std::uint32_t>(lo),
                                          static_cast<std::uint32_t>(hi));
        } catch (const std::exception&) {
            return config_error("--primes", "expected lo..hi, got '" + primes_range + "'");
        }
        cfg.primes = primes_range;
    } else {
        for (const std::string& tok : split_list(prime_list)) {
            long v = 0;
            try {
                v = std::stol(tok);
            } catch (const std::exception&) {
                return config_error("--prime-list", "'" + tok + "' is not an integer");
            }
            if (v < 5 || !is_prime(static_cast<std::uint64_t>(v)))
                return config_error("--prime-list", "'" + tok + "' is not a prime >= 5");
            spec.primes.push_back(static_cast<std::uint32_t>(v));
        }
        cfg.primes = prime_list;
    }

    if (a_list.empty()) {
        // canonical parameter set
        for (const char* lit : {"-1/2", "-1/3", "-2/3", "-1/4", "-3/4", "-1/6", "-5/6"})
            spec.a_values.push_back(Rational::parse(lit));
    } else {
        for (const std::string& tok : split_list(a_list)) {
            try {
                spec.a_values.push_back(Rational::parse(tok));
            } catch (const std::exception& e) {
                return config_error("--a", "'" + tok + "': " + e.what());
            }
        }
    }
    for (const Rational& a : spec.a_values) cfg.a_values.push_back(a.to_string());

    if (checks != "all") {
        for (const std::string& id : split_list(checks)) {
            if (!find_check(id)) return config_error("--checks", "unknown check id '" + id + "'");
            spec.check_ids.push_back(id);
        }
    }
    if (jobs < 1) return config_error("--jobs", "must be >= 1");
    if (format != "table" && format != "json" && format != "csv")
        return config_error("--format", "must be table, json or csv");

    spec.random_count = random_count;
    spec.seed = seed;
    spec.expensive = expensive;
    spec.jobs = jobs;
    cfg.random_count = random_count;
    cfg.seed = seed;
    cfg.checks = checks;
    cfg.expensive = expensive;
    cfg.jobs = jobs;

    const Report report = make_report(cfg, scan(spec));

    std::string body;
    if (format == "json") body = to_json(report);
    else if (format == "csv") body = to_csv(report.results);
    else body = to_table(report);

    if (out_path.empty()) {
        std::cout << body;
    } else {
        std::ofstream os(out_path, std::ios::binary);
        if (!os) return config_error("--out", "cannot open '" + out_path + "' for writing");
        os << body;
        if (!os.good()) return config_error("--out", "failed writing '" + out_path + "'");
    }

    return report.summary.failed == 0 ? 0 : 1;
}
