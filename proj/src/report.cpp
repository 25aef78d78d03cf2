#include "supercong/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

namespace supercong {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* kCsvHeader = "check_id,p,a_num,a_den,branch,k,lhs,rhs,pass,error,micros";

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    out += "\"";
    return out;
}

std::vector<std::string> csv_split(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    fields.push_back(cur);
    return fields;
}

void record_fields(const CheckResult& r, std::string& a_num, std::string& a_den) {
    if (r.fixed_a) {
        a_num = "fixed";
        a_den = "";
    } else {
        a_num = r.a.num().to_string();
        a_den = r.a.den().to_string();
    }
}

CheckResult record_from(const std::string& check_id, std::uint32_t p, const std::string& a_num,
                        const std::string& a_den, const std::string& branch, std::uint32_t k,
                        std::uint64_t lhs, std::uint64_t rhs, bool pass, const std::string& error,
                        std::int64_t micros) {
    CheckResult r;
    r.check_id = check_id;
    r.p = p;
    if (a_num == "fixed") {
        r.fixed_a = true;
    } else {
        r.fixed_a = false;
        r.a = Rational(BigInt(a_num), BigInt(a_den));
    }
    r.branch = branch;
    r.k = k;
    r.lhs = lhs;
    r.rhs = rhs;
    r.pass = pass;
    r.error = error;
    r.micros = micros;
    return r;
}

}  // namespace

Report make_report(ReportConfig config, std::vector<CheckResult> results) {
    Report rep;
    rep.config = std::move(config);
    rep.results = std::move(results);
    for (const auto& r : rep.results) {
        ++rep.summary.results;
        if (r.pass) ++rep.summary.passed;
        else ++rep.summary.failed;
        if (!r.error.empty()) ++rep.summary.errors;
    }
    return rep;
}

std::string to_json(const Report& report) {
    ordered_json j;
    ordered_json cfg;
    cfg["primes"] = report.config.primes;
    cfg["a"] = report.config.a_values;
    cfg["random"] = report.config.random_count;
    cfg["seed"] = report.config.seed;
    cfg["checks"] = report.config.checks;
    cfg["expensive"] = report.config.expensive;
    cfg["jobs"] = report.config.jobs;
    j["config"] = cfg;
    ordered_json rows = ordered_json::array();
    for (const auto& r : report.results) {
        ordered_json row;
        std::string a_num, a_den;
        record_fields(r, a_num, a_den);
        row["check_id"] = r.check_id;
        row["p"] = r.p;
        row["a_num"] = a_num;
        row["a_den"] = a_den;
        row["branch"] = r.branch;
        row["k"] = r.k;
        row["lhs"] = r.lhs;
        row["rhs"] = r.rhs;
        row["pass"] = r.pass;
        row["error"] = r.error;
        row["micros"] = 0;
        rows.push_back(std::move(row));
    }
    j["results"] = std::move(rows);
    ordered_json sum;
    sum["results"] = report.summary.results;
    sum["passed"] = report.summary.passed;
    sum["failed"] = report.summary.failed;
    sum["errors"] = report.summary.errors;
    j["summary"] = sum;
    return j.dump(2) + "\n";
}

std::string to_csv(const std::vector<CheckResult>& results) {
    std::ostringstream os;
    os << kCsvHeader << "\n";
    for (const auto& r : results) {
        std::string a_num, a_den;
        record_fields(r, a_num, a_den);
        os << csv_escape(r.check_id) << ',' << r.p << ',' << a_num << ',' << a_den << ','
           << csv_escape(r.branch) << ',' << r.k << ',' << r.lhs << ',' << r.rhs << ','
           << (r.pass ? "true" : "false") << ',' << csv_escape(r.error) << ',' << 0 << "\n";
    }
    return os.str();
}

std::string to_table(const Report& report) {
    struct Row {
        std::uint64_t results = 0, passed = 0, failed = 0;
        std::int64_t micros = 0;
        std::uint32_t k = 0;
    };
    std::map<std::string, Row> rows;
    for (const auto& r : report.results) {
        Row& row = rows[r.check_id];
        ++row.results;
        if (r.pass) ++row.passed;
        else ++row.failed;
        row.micros += r.micros;
        row.k = r.k;
    }
    std::ostringstream os;
    os << "check        k  results     pass     fail   time(ms)\n";
    char buf[128];
    std::int64_t total_micros = 0;
    for (const auto& [id, row] : rows) {
        std::snprintf(buf, sizeof(buf), "%-11s %2u %8llu %8llu %8llu %10.1f\n", id.c_str(), row.k,
                      static_cast<unsigned long long>(row.results),
                      static_cast<unsigned long long>(row.passed),
                      static_cast<unsigned long long>(row.failed), row.micros / 1000.0);
        os << buf;
        total_micros += row.micros;
    }
    std::snprintf(buf, sizeof(buf), "total: %llu results, %llu passed, %llu failed (%llu errors), %.1f ms\n",
                  static_cast<unsigned long long>(report.summary.results),
                  static_cast<unsigned long long>(report.summary.passed),
                  static_cast<unsigned long long>(report.summary.failed),
                  static_cast<unsigned long long>(report.summary.errors), total_micros / 1000.0);
    os << buf;
    return os.str();
}

Report parse_json(const std::string& text) {
    const ordered_json j = ordered_json::parse(text);
    Report rep;
    const auto& cfg = j.at("config");
    rep.config.primes = cfg.at("primes").get<std::string>();
    rep.config.a_values = cfg.at("a").get<std::vector<std::string>>();
    rep.config.random_count = cfg.at("random").get<std::uint32_t>();
    rep.config.seed = cfg.at("seed").get<std::uint64_t>();
    rep.config.checks = cfg.at("checks").get<std::string>();
    rep.config.expensive = cfg.at("expensive").get<bool>();
    rep.config.jobs = cfg.at("jobs").get<std::uint32_t>();
    std::vector<CheckResult> results;
    for (const auto& row : j.at("results")) {
        results.push_back(record_from(
            row.at("check_id").get<std::string>(), row.at("p").get<std::uint32_t>(),
            row.at("a_num").get<std::string>(), row.at("a_den").get<std::string>(),
            row.at("branch").get<std::string>(), row.at("k").get<std::uint32_t>(),
            row.at("lhs").get<std::uint64_t>(), row.at("rhs").get<std::uint64_t>(),
            row.at("pass").get<bool>(), row.at("error").get<std::string>(),
            row.at("micros").get<std::int64_t>()));
    }
    return make_report(rep.config, std::move(results));
}

std::vector<CheckResult> parse_csv(const std::string& text) {
    std::vector<CheckResult> out;
    std::istringstream is(text);
    std::string line;
    bool first = true;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (first) {
            first = false;
            continue;  // header
        }
        const auto f = csv_split(line);
        if (f.size() != 11) throw std::invalid_argument("csv: bad field count in row: " + line);
        out.push_back(record_from(f[0], static_cast<std::uint32_t>(std::stoul(f[1])), f[2], f[3],
                                  f[4], static_cast<std::uint32_t>(std::stoul(f[5])),
                                  std::stoull(f[6]), std::stoull(f[7]), f[8] == "true", f[9],
                                  std::stoll(f[10])));
    }
    return out;
}

}  // namespace supercong
