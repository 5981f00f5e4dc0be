#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bpv/record.hpp"
#include "bpv/sweep.hpp"

namespace bpv {

/// One verification run as configured from the command line. Reports echo
/// this configuration and must be byte-identical across runs with the same
/// configuration, so nothing time- or host-dependent belongs here.
struct RunConfig {
    std::vector<std::string> families;
    Bounds bounds;
    std::vector<long> primes{2, 3, 5, 7};
    long precision = 4;
    bool strict_parity = false;
    bool inject_fault = false;
};

inline std::size_t count_passed(const std::vector<VerificationRecord>& records) {
    std::size_t n = 0;
    for (const auto& r : records)
        if (r.pass) ++n;
    return n;
}

inline std::string write_json(const RunConfig& config,
                              const std::vector<VerificationRecord>& records) {
    nlohmann::ordered_json root;
    root["config"] = {
        {"families", config.families},
        {"max_m", config.bounds.max_m},
        {"max_n", config.bounds.max_n},
        {"max_q", config.bounds.max_q},
        {"primes", config.primes},
        {"precision", config.precision},
        {"strict_parity", config.strict_parity},
        {"inject_fault", config.inject_fault},
    };
    const std::size_t passed = count_passed(records);
    root["summary"] = {
        {"total", records.size()},
        {"passed", passed},
        {"failed", records.size() - passed},
    };
    nlohmann::ordered_json recs = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        recs.push_back({
            {"family", r.family},
            {"params", r.params},
            {"verdict", r.pass ? "pass" : "fail"},
            {"lhs", r.lhs},
            {"rhs", r.rhs},
            {"mismatch", r.mismatch},
        });
    }
    root["records"] = std::move(recs);
    return root.dump(2) + "\n";
}

namespace detail {
inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}
}  // namespace detail

inline std::string write_csv(const RunConfig&, const std::vector<VerificationRecord>& records) {
    std::string out = "family,params,verdict,lhs,rhs,mismatch\n";
    for (const auto& r : records) {
        out += detail::csv_field(r.family) + "," + detail::csv_field(r.params) + "," +
               (r.pass ? "pass" : "fail") + "," + detail::csv_field(r.lhs) + "," +
               detail::csv_field(r.rhs) + "," + detail::csv_field(r.mismatch) + "\n";
    }
    return out;
}

inline std::string write_markdown(const RunConfig& config,
                                  const std::vector<VerificationRecord>& records) {
    std::string out = "# Identity verification report\n\n";
    out += "Bounds: max_m=" + std::to_string(config.bounds.max_m) +
           ", max_n=" + std::to_string(config.bounds.max_n) +
           ", max_q=" + std::to_string(config.bounds.max_q) +
           "; precision M=" + std::to_string(config.precision) + "; primes=";
    for (std::size_t i = 0; i < config.primes.size(); ++i)
        out += (i ? "," : "") + std::to_string(config.primes[i]);
    if (config.strict_parity) out += "; strict parity reading";
    out += "\n\n| family | description | records | pass | fail |\n";
    out += "|---|---|---:|---:|---:|\n";

    // Preserve first-appearance order of families in the record stream.
    std::vector<std::string> order;
    for (const auto& r : records)
        if (order.empty() || order.back() != r.family) {
            bool seen = false;
            for (const auto& f : order) seen = seen || f == r.family;
            if (!seen) order.push_back(r.family);
        }
    for (const auto& fam : order) {
        std::size_t total = 0, passed = 0;
        for (const auto& r : records)
            if (r.family == fam) {
                ++total;
                passed += r.pass ? 1 : 0;
            }
        std::string desc;
        if (const auto f = family_from_tag(fam)) desc = family_description(*f);
        else if (fam == "lemma1") desc = "Volkenborn reflection/shift functional equation";
        else if (fam == "functional_eq") desc = "indefinite-sum functional equation";
        else if (fam == "witt_oracle") desc = "numeric limit vs exact Bernoulli value in Q_p";
        out += "| " + fam + " | " + desc + " | " + std::to_string(total) + " | " +
               std::to_string(passed) + " | " + std::to_string(total - passed) + " |\n";
    }

    const std::size_t failed = records.size() - count_passed(records);
    if (failed > 0) {
        out += "\n## Failures\n\n";
        for (const auto& r : records)
            if (!r.pass)
                out += "- `" + r.family + "` (" + r.params + "): " + r.mismatch + "\n";
    }
    return out;
}

inline std::string write_report(const std::string& format, const RunConfig& config,
                                const std::vector<VerificationRecord>& records) {
    if (format == "json") return write_json(config, records);
    if (format == "csv") return write_csv(config, records);
    if (format == "markdown") return write_markdown(config, records);
    throw std::invalid_argument("unknown report format: " + format);
}

}  // namespace bpv
