// bpverify — exact verification of Bernoulli polynomial identity families
// and of the p-adic Volkenborn machinery behind them.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bpv/bernoulli.hpp"
#include "bpv/report.hpp"
#include "bpv/sweep.hpp"
#include "bpv/volkenborn.hpp"

namespace {

const std::vector<std::string> kPadicSuites{"lemma1", "functional_eq", "witt_oracle"};

std::vector<std::string> all_family_tags() {
    std::vector<std::string> tags;
    for (const auto& e : bpv::family_registry()) tags.push_back(e.tag);
    tags.insert(tags.end(), kPadicSuites.begin(), kPadicSuites.end());
    return tags;
}

int usage_error(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 2;
}

/// Expands "all", validates tags, and returns the selection in canonical
/// (registry) order so reports are deterministic regardless of flag order.
bool resolve_families(const std::vector<std::string>& requested, std::vector<std::string>& out,
                      std::string& bad) {
    const std::vector<std::string> canonical = all_family_tags();
    bool want_all = false;
    for (const auto& f : requested) {
        if (f == "all") {
            want_all = true;
        } else if (std::find(canonical.begin(), canonical.end(), f) == canonical.end()) {
            bad = f;
            return false;
        }
    }
    for (const auto& tag : canonical) {
        const bool selected =
            want_all || std::find(requested.begin(), requested.end(), tag) != requested.end();
        if (selected) out.push_back(tag);
    }
    return true;
}

int run_verify(const bpv::RunConfig& config, const std::string& format, const std::string& out_path) {
    for (const long p : config.primes)
        if (!bpv::is_prime(p)) return usage_error("--prime value " + std::to_string(p) + " is not prime");
    if (config.bounds.max_m < 1 || config.bounds.max_n < 1 || config.bounds.max_q < 0)
        return usage_error("bounds must be positive");
    if (config.precision < 1) return usage_error("--precision must be >= 1");

    std::vector<bpv::VerificationRecord> records;
    bool first_sweep = true;
    for (const auto& tag : config.families) {
        std::vector<bpv::VerificationRecord> recs;
        if (const auto family = bpv::family_from_tag(tag)) {
            bpv::SweepOptions opts;
            opts.strict_parity = config.strict_parity;
            opts.corrupt_first = config.inject_fault && first_sweep;
            recs = bpv::sweep(*family, config.bounds, opts);
        } else if (tag == "lemma1") {
            recs = bpv::sweep_lemma1(config.bounds, config.primes.front());
        } else if (tag == "functional_eq") {
            recs = bpv::sweep_functional_equation(config.bounds);
        } else if (tag == "witt_oracle") {
            recs = bpv::sweep_witt_oracle(config.bounds, config.primes, config.precision);
        }
        first_sweep = false;
        records.insert(records.end(), recs.begin(), recs.end());
    }

    const std::string report = bpv::write_report(format, config, records);
    if (out_path.empty()) {
        std::cout << report;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) return usage_error("cannot open output file " + out_path);
        out << report;
        const std::size_t passed = bpv::count_passed(records);
        std::cout << "verified " << records.size() << " identity instances, " << passed
                  << " passed, " << records.size() - passed << " failed -> " << out_path << "\n";
    }
    return bpv::count_passed(records) == records.size() ? 0 : 1;
}

int run_bernoulli(long n, bool as_poly, const std::string& at) {
    if (n < 0) return usage_error("index must be nonnegative");
    try {
        if (as_poly) {
            std::cout << bpv::bernoulli_polynomial(n).to_string() << "\n";
        } else if (!at.empty()) {
            std::cout << bpv::bernoulli_at(n, bpv::Rational(at)).to_string() << "\n";
        } else {
            std::cout << bpv::bernoulli_number(n).to_string() << "\n";
        }
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    }
    return 0;
}

int run_volkenborn(long degree, const std::string& x0_str, long p, long precision) {
    if (degree < 0) return usage_error("--degree must be nonnegative");
    if (!bpv::is_prime(p)) return usage_error("--prime value " + std::to_string(p) + " is not prime");
    if (precision < 1) return usage_error("--precision must be >= 1");
    bpv::Rational x0(0);
    try {
        x0 = bpv::Rational(x0_str);
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    }

    const bpv::Poly f = bpv::Poly::monomial(degree, bpv::Rational(1), "t").shift(x0);
    std::cout << "integrand f(t) = (" << x0.to_string() << " + t)^" << degree << " = "
              << f.to_string() << "\n";
    const bpv::VolkenbornSeries series = bpv::volkenborn_converge(f, p, precision);
    std::cout << "  N   S_N = p^-N sum_{j<p^N} f(j)\n";
    for (const auto& [n, s] : series.partial_sums) {
        std::cout << "  " << n << "   " << s.to_string() << "   = "
                  << bpv::rational_to_padic(s, p, precision).to_string() << "\n";
    }
    const bpv::Rational exact = bpv::bernoulli_at(degree, x0);
    const bpv::PadicNumber expected = bpv::rational_to_padic(exact, p, precision);
    if (!series.stabilized) {
        std::cout << "no stabilization at unit precision " << precision << " within the ceiling\n";
        return 1;
    }
    std::cout << "stabilized at N = " << series.stabilized_at << ": " << series.value.to_string()
              << "\n";
    const std::string name = "B_" + std::to_string(degree) + "(" + x0.to_string() + ")";
    if (series.value == expected) {
        std::cout << "agrees with " << name << " = " << exact.to_string() << "\n";
        return 0;
    }
    std::cout << "DISAGREES with " << name << " = " << exact.to_string() << " = "
              << expected.to_string() << "\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of Bernoulli polynomial identities over Q and Z_p"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "sweep identity families and emit a report");
    std::vector<std::string> families{};
    verify->add_option("--family", families,
                       "family tag to sweep, or 'all' (repeatable; see --list)");
    bpv::Bounds bounds{8, 8, 4};
    verify->add_option("--max-m", bounds.max_m, "upper bound for the parameter m");
    verify->add_option("--max-n", bounds.max_n, "upper bound for the parameter n");
    verify->add_option("--max-q", bounds.max_q, "upper bound for the parameter q");
    std::vector<long> primes{2, 3, 5, 7};
    verify->add_option("--prime", primes, "primes for the p-adic checks (repeatable)");
    long precision = 4;
    verify->add_option("--precision", precision, "unit precision M for p-adic comparisons");
    std::string format = "json";
    verify->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"json", "csv", "markdown"}));
    std::string out_path;
    verify->add_option("--out", out_path, "write the report to this file instead of stdout");
    bool strict_parity = false;
    verify->add_flag("--strict-parity", strict_parity,
                     "use the printed ell+m parity reading of the fourth constant identity");
    bool inject_fault = false;
    verify->add_flag("--inject-fault", inject_fault)->group("");  // test fixture hook
    bool list_families = false;
    verify->add_flag("--list", list_families, "list family tags and exit");

    // bernoulli
    auto* bern = app.add_subcommand("bernoulli", "print B_n, B_n(x) or B_n(a) exactly");
    long bern_n = 0;
    bern->add_option("n", bern_n, "index n")->required();
    bool bern_poly = false;
    bern->add_flag("--poly", bern_poly, "print the polynomial B_n(x)");
    std::string bern_at;
    bern->add_option("--at", bern_at, "evaluate at a rational point, e.g. 1/2");

    // volkenborn
    auto* volk = app.add_subcommand(
        "volkenborn", "numerically integrate (x0+t)^n over Z_p and compare with B_n(x0)");
    long degree = 1;
    volk->add_option("--degree,-n", degree, "monomial degree n");
    std::string x0 = "0";
    volk->add_option("--x0", x0, "rational shift x0");
    long volk_prime = 2;
    volk->add_option("--prime", volk_prime, "prime p");
    long volk_precision = 4;
    volk->add_option("--precision", volk_precision, "unit precision M");

    // proof-steps
    auto* steps = app.add_subcommand("proof-steps", "sweep only the proof-step identity families");
    bpv::Bounds step_bounds{8, 8, 8};
    steps->add_option("--max-m", step_bounds.max_m, "upper bound for the parameter m");
    steps->add_option("--max-n", step_bounds.max_n, "upper bound for the parameter n");
    steps->add_option("--max-q", step_bounds.max_q, "upper bound for the parameter q");
    std::string step_format = "json";
    steps->add_option("--format", step_format, "report format")
        ->check(CLI::IsMember({"json", "csv", "markdown"}));
    std::string step_out;
    steps->add_option("--out", step_out, "write the report to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (*verify) {
        if (list_families) {
            for (const auto& tag : all_family_tags()) std::cout << tag << "\n";
            return 0;
        }
        if (families.empty()) families.push_back("all");
        bpv::RunConfig config;
        std::string bad;
        if (!resolve_families(families, config.families, bad))
            return usage_error("unknown family '" + bad + "' (try --list)");
        config.bounds = bounds;
        config.primes = primes;
        config.precision = precision;
        config.strict_parity = strict_parity;
        config.inject_fault = inject_fault;
        return run_verify(config, format, out_path);
    }
    if (*bern) return run_bernoulli(bern_n, bern_poly, bern_at);
    if (*volk) return run_volkenborn(degree, x0, volk_prime, volk_precision);
    if (*steps) {
        bpv::RunConfig config;
        for (const auto& e : bpv::family_registry()) {
            const std::string tag = e.tag;
            if (tag.rfind("step_", 0) == 0) config.families.push_back(tag);
        }
        config.bounds = step_bounds;
        return run_verify(config, step_format, step_out);
    }
    return 2;
}
