#ifndef SUPERCONG_REPORT_HPP
#define SUPERCONG_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "supercong/catalog.hpp"

namespace supercong {

struct ReportConfig {
    std::string primes;               // "lo..hi" or "p1,p2,..."
    std::vector<std::string> a_values;
    std::uint32_t random_count = 0;
    std::uint64_t seed = 0;
    std::string checks = "all";
    bool expensive = false;
    std::uint32_t jobs = 1;
};

struct ReportSummary {
    std::uint64_t results = 0;
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;
    std::uint64_t errors = 0;
};

struct Report {
    ReportConfig config;
    std::vector<CheckResult> results;
    ReportSummary summary;
};

Report make_report(ReportConfig config, std::vector<CheckResult> results);

// Machine formats are byte-deterministic for a given (config, results):
// the micros field is serialized as 0 so reports regress cleanly.
std::string to_json(const Report& report);
std::string to_csv(const std::vector<CheckResult>& results);
/// Human summary: pass/fail counts per check id plus measured timings.
std::string to_table(const Report& report);

Report parse_json(const std::string& text);
std::vector<CheckResult> parse_csv(const std::string& text);

}  // namespace supercong

#endif
