// Acceptance suite: runs every acceptance criterion at its stated bound and
// prints one PASS/FAIL line per criterion. Exit status is the number of
// failing criteria. argv[1] must be the path to the bpverify binary for the
// end-to-end criterion.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bpv/bernoulli.hpp"
#include "bpv/identities.hpp"
#include "bpv/padic.hpp"
#include "bpv/proof_steps.hpp"
#include "bpv/report.hpp"
#include "bpv/sweep.hpp"
#include "bpv/volkenborn.hpp"

using namespace bpv;

namespace {

int g_failures = 0;

void report(int number, const std::string& what, bool ok, const std::string& detail = "") {
    std::printf("%s  criterion %2d: %s%s\n", ok ? "PASS" : "FAIL", number, what.c_str(),
                detail.empty() ? "" : ("  [" + detail + "]").c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

bool sweep_clean(Family family, const Bounds& bounds, std::size_t* count = nullptr) {
    const auto recs = sweep(family, bounds);
    if (count) *count += recs.size();
    return count_passed(recs) == recs.size() && !recs.empty();
}

struct CommandResult {
    int exit_code;
    std::string output;
};

CommandResult run_command(const std::string& cmd) {
    const std::string out_file = "acceptance_capture.txt";
    const int status = std::system((cmd + " > " + out_file + " 2>&1").c_str());
    std::ifstream in(out_file);
    std::stringstream ss;
    ss << in.rdbuf();
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";

    // 1. Polynomial identity parts 1-4, every admissible tuple with m <= 12.
    {
        const auto t0 = std::chrono::steady_clock::now();
        std::size_t n = 0;
        bool ok = sweep_clean(Family::Thm1_1, {12, 12, 12}, &n) &&
                  sweep_clean(Family::Thm1_2, {12, 12, 12}, &n) &&
                  sweep_clean(Family::Thm1_3, {12, 12, 12}, &n) &&
                  sweep_clean(Family::Thm1_4, {12, 12, 12}, &n);
        const auto secs =
            std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - t0)
                .count();
        ok = ok && secs < 30;
        report(1, "convolution identity parts 1-4, m <= 12, exact equality", ok,
               std::to_string(n) + " instances in " + std::to_string(secs) + "s");
    }

    // 2. Corollaries and the ell-free identity, plus bitwise agreement with
    //    the nu = 0 / ell = 0 specializations.
    {
        std::size_t n = 0;
        bool ok = sweep_clean(Family::Cor1, {12, 12, 12}, &n) &&
                  sweep_clean(Family::Cor2, {12, 12, 12}, &n) &&
                  sweep_clean(Family::AlzerKwongPoly, {12, 12, 12}, &n);
        for (long m = 1; m <= 12 && ok; ++m) {
            for (long ell = 0; ell <= m - 1 && ok; ++ell) {
                const auto c1 = build_corollary(1, m, ell);
                const auto s1 = build_thm1_part3(m, 0, ell);
                const auto c2 = build_corollary(2, m, ell);
                const auto s2 = build_thm1_part4(m, 0, ell);
                ok = c1.first == s1.first && c1.second == s1.second && c2.first == s2.first &&
                     c2.second == s2.second;
            }
            for (long nu = 0; nu <= m - 1 && ok; ++nu) {
                const auto ak = build_alzer_kwong_poly(m, nu);
                const auto s3 = build_thm1_part3(m, nu, 0);
                ok = ak.first == s3.first && ak.second == s3.second;
            }
        }
        report(2, "corollaries and ell-free identity agree with their specializations", ok,
               std::to_string(n) + " instances");
    }

    // 3. Constant identities for m <= 12, with the pinned spot values.
    {
        std::size_t n = 0;
        bool ok = sweep_clean(Family::AkConst1, {12, 12, 12}, &n) &&
                  sweep_clean(Family::AkConst2, {12, 12, 12}, &n) &&
                  sweep_clean(Family::AkConst3, {12, 12, 12}, &n) &&
                  sweep_clean(Family::AkConst4, {12, 12, 12}, &n);
        const auto spot_a = eval_ak_constant(1, 1, 0);
        const auto spot_b = eval_ak_constant(1, 2, 1);
        ok = ok && spot_a.first == Rational(1) && spot_a.second == Rational(1) &&
             spot_b.first == Rational(-6) && spot_b.second == Rational(-6);
        for (long m = 1; m <= 12 && ok; ++m)
            for (long nu = 0; nu + 2 <= m && ok; ++nu)
                for (long ell = 0; ell <= m - nu - 2 && ok; ++ell)
                    ok = eval_ak_constant(3, m, nu, ell).first == Rational(0);
        report(3, "constant identities, m <= 12, spot values 1 and -6, vanishing part 3", ok,
               std::to_string(n) + " instances");
    }

    // 4. Reflection/extension/shift identities at m, n <= 12, q <= 6.
    {
        std::size_t n = 0;
        bool ok = sweep_clean(Family::WuSunPan, {12, 12, 6}, &n) &&
                  sweep_clean(Family::MomiyamaExt, {12, 12, 6}, &n) &&
                  sweep_clean(Family::ThmBinomShift, {12, 12, 6}, &n);
        const auto wsp = build_wu_sun_pan(1, 1);
        const Poly expect({Rational(-1, 3), Rational(0), Rational(1)}, "x");
        ok = ok && wsp.first == expect && wsp.second == expect;
        report(4, "reflection, extension, and shift identities, m,n <= 12, q <= 6", ok,
               std::to_string(n) + " instances");
    }

    // 5. The vanishing Bernoulli sum for 1 <= n <= 20.
    {
        bool ok = true;
        for (long n = 1; n <= 20; ++n) ok = ok && eval_kaneko(n) == Rational(0);
        report(5, "vanishing sum over Bernoulli numbers, n <= 20", ok);
    }

    // 6. Trivariate symmetry as a bivariate identity, m, n <= 10.
    {
        std::size_t n = 0;
        const bool ok = sweep_clean(Family::SunTrivariate, {10, 10, 10}, &n);
        report(6, "trivariate symmetry with z = 1-x-y, m,n <= 10", ok,
               std::to_string(n) + " instances");
    }

    // 7. Proof-step suite: absorption identity exhaustively to j+m <= 40,
    //    all other steps for m, n, q <= 8.
    {
        std::size_t n = 0;
        const bool ok = sweep_clean(Family::StepBinom, {8, 8, 8}, &n) &&
                        sweep_clean(Family::StepRDifference, {8, 8, 8}, &n) &&
                        sweep_clean(Family::StepRDerivValue, {8, 8, 8}, &n) &&
                        sweep_clean(Family::StepHSymmetry, {8, 8, 8}, &n) &&
                        sweep_clean(Family::StepGExpansion, {8, 8, 8}, &n) &&
                        sweep_clean(Family::StepThm4P1, {8, 8, 8}, &n) &&
                        sweep_clean(Family::StepLExpansion, {8, 8, 8}, &n);
        report(7, "proof-step suite (absorption to j+m = 40; products R, G, H, L at 8)", ok,
               std::to_string(n) + " instances");
    }

    // 8. Witt cross-check: numeric limit vs exact value in Q_p at M = 4,
    //    plus the exact 2-adic convergence rate for f(t) = t.
    {
        bool ok = true;
        std::size_t n = 0;
        for (const long p : {2L, 3L, 5L, 7L})
            for (long deg = 0; deg <= 8; ++deg)
                for (long x0 = 0; x0 <= 2; ++x0) {
                    ok = ok && check_witt_oracle(deg, x0, p, 4).pass;
                    ++n;
                }
        const Poly t = Poly::variable("t");
        for (long level = 2; level <= 12; ++level) {
            const Rational err = volkenborn_partial_sum(t, 2, level) + Rational(1, 2);
            ok = ok && padic_valuation(err, 2) == level - 1;
        }
        report(8, "numeric Volkenborn limits agree with exact values in Q_p (M = 4)", ok,
               std::to_string(n) + " oracle points");
    }

    // 9. Classical property suite for n <= 30 (translation as a bivariate
    //    identity for n <= 20).
    {
        bool ok = true;
        const Poly one_minus_x({Rational(1), Rational(-1)}, "x");
        for (long n = 0; n <= 30 && ok; ++n) {
            const Poly b = bernoulli_polynomial(n);
            const Rational sgn = n % 2 == 0 ? Rational(1) : Rational(-1);
            ok = ok && b.compose(one_minus_x) == sgn * b;                       // reflection
            ok = ok && b.eval(Rational(1)) == sgn * b.eval(Rational(0));        // endpoint
            if (n >= 1) {
                ok = ok && b.shift(Rational(1)) - b == Poly::monomial(n - 1, Rational(n), "x");
                for (long r = 2; r <= 5 && ok; ++r) {
                    Poly tele("x");
                    for (long i = 0; i < r; ++i)
                        tele += Rational(n) * Poly::monomial(n - 1, Rational(1), "x").shift(Rational(i));
                    ok = ok && b.shift(Rational(r)) - b == tele;                // telescoping
                }
            }
        }
        const BiPoly::Vars xy{"x", "y"};
        const BiPoly x_plus_y = BiPoly::var(0, xy) + BiPoly::var(1, xy);
        for (long n = 0; n <= 20 && ok; ++n) {
            BiPoly rhs(xy);
            for (long j = 0; j <= n; ++j)
                rhs += Rational(binomial(n, j)) *
                       (BiPoly::from_poly(bernoulli_polynomial(j), 0, xy) *
                        BiPoly::monomial(Rational(1), 0, n - j, xy));
            ok = ok && compose_poly(bernoulli_polynomial(n), x_plus_y) == rhs;  // translation
        }
        report(9, "classical property suite, n <= 30 (translation n <= 20)", ok);
    }

    // 10. End-to-end CLI: full default sweep exits 0 with a byte-deterministic
    //     report; an injected corrupt coefficient exits 1 with a populated
    //     first-mismatch descriptor.
    {
        bool ok = !cli.empty();
        std::string detail = cli.empty() ? "no CLI path given" : "";
        if (ok) {
            const auto run_a =
                run_command(cli + " verify --family all --format json --out acceptance_a.json");
            const auto run_b =
                run_command(cli + " verify --family all --format json --out acceptance_b.json");
            ok = run_a.exit_code == 0 && run_b.exit_code == 0;
            if (!ok) detail = "default sweep exit codes " + std::to_string(run_a.exit_code) + "/" +
                              std::to_string(run_b.exit_code);
            if (ok) {
                const std::string a = slurp("acceptance_a.json");
                ok = !a.empty() && a == slurp("acceptance_b.json");
                if (!ok) detail = "reports not byte-identical";
            }
            if (ok) {
                const auto corrupt = run_command(
                    cli +
                    " verify --family kaneko --inject-fault --format json --out acceptance_c.json");
                ok = corrupt.exit_code == 1;
                if (!ok) detail = "fault run exit code " + std::to_string(corrupt.exit_code);
                if (ok) {
                    const auto root = nlohmann::json::parse(slurp("acceptance_c.json"));
                    const std::string mismatch = root["records"][0]["mismatch"];
                    ok = root["records"][0]["verdict"] == "fail" && !mismatch.empty();
                    if (!ok) detail = "mismatch descriptor not populated";
                }
            }
        }
        report(10, "end-to-end: deterministic full sweep, fault injection flagged", ok, detail);
    }

    if (g_failures == 0) std::printf("all acceptance criteria passed\n");
    return g_failures;
}
