#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bpv/identities.hpp"
#include "bpv/proof_steps.hpp"
#include "bpv/record.hpp"
#include "bpv/volkenborn.hpp"

namespace bpv {

/// The verifiable identity families, one tag per theorem part, corollary
/// part, constant identity, and proof-step identity.
enum class Family {
    Thm1_1,
    Thm1_2,
    Thm1_3,
    Thm1_4,
    Cor1,
    Cor2,
    AlzerKwongPoly,
    AkConst1,
    AkConst2,
    AkConst3,
    AkConst4,
    WuSunPan,
    MomiyamaExt,
    Kaneko,
    ThmBinomShift,
    SunTrivariate,
    StepBinom,
    StepRDifference,
    StepRDerivValue,
    StepHSymmetry,
    StepGExpansion,
    StepThm4P1,
    StepLExpansion,
};

struct FamilyInfo {
    Family family;
    const char* tag;
    const char* description;
};

inline const std::vector<FamilyInfo>& family_registry() {
    static const std::vector<FamilyInfo> reg{
        {Family::Thm1_1, "thm1_1", "parity-filtered Bernoulli convolution, part 1"},
        {Family::Thm1_2, "thm1_2", "parity-filtered Bernoulli convolution, part 2"},
        {Family::Thm1_3, "thm1_3", "parity-filtered Bernoulli convolution, part 3"},
        {Family::Thm1_4, "thm1_4", "parity-filtered Bernoulli convolution, part 4"},
        {Family::Cor1, "cor1", "nu=0 corollary of part 3"},
        {Family::Cor2, "cor2", "nu=0 corollary of part 4"},
        {Family::AlzerKwongPoly, "alzer_kwong_poly", "Alzer-Kwong polynomial identity"},
        {Family::AkConst1, "ak_const_1", "Alzer-Kwong constant identity, part 1"},
        {Family::AkConst2, "ak_const_2", "Alzer-Kwong constant identity, part 2"},
        {Family::AkConst3, "ak_const_3", "Alzer-Kwong constant identity, part 3 (vanishing sums)"},
        {Family::AkConst4, "ak_const_4", "Alzer-Kwong constant identity, part 4"},
        {Family::WuSunPan, "wu_sun_pan", "Wu-Sun-Pan reflection identity"},
        {Family::MomiyamaExt, "momiyama_ext", "Momiyama-type extension with shift parameter q"},
        {Family::Kaneko, "kaneko", "Kaneko vanishing sum over Bernoulli numbers"},
        {Family::ThmBinomShift, "thm_binom_shift", "binomial identity between B(x) and B(x+1)"},
        {Family::SunTrivariate, "sun_trivariate", "Sun trivariate symmetry with z = 1-x-y"},
        {Family::StepBinom, "step_binom", "binomial coefficient absorption identity"},
        {Family::StepRDifference, "step_r_difference", "shift difference of the R product, expanded"},
        {Family::StepRDerivValue, "step_r_deriv_value", "derivative values of the R product at t=0"},
        {Family::StepHSymmetry, "step_h_symmetry", "H product reflection symmetry and zero integral"},
        {Family::StepGExpansion, "step_g_expansion", "G product binomial expansions"},
        {Family::StepThm4P1, "step_thm4_p1", "shifted-power expansion pair"},
        {Family::StepLExpansion, "step_l_expansion", "L product expansions at sampled x"},
    };
    return reg;
}

inline std::string family_tag(Family f) {
    for (const auto& e : family_registry())
        if (e.family == f) return e.tag;
    throw std::logic_error("unknown family");
}

inline std::string family_description(Family f) {
    for (const auto& e : family_registry())
        if (e.family == f) return e.description;
    throw std::logic_error("unknown family");
}

inline std::optional<Family> family_from_tag(const std::string& tag) {
    for (const auto& e : family_registry())
        if (tag == e.tag) return e.family;
    return std::nullopt;
}

/// Sweep bounds on the theorem parameters. Families ignore the bounds that
/// do not apply to them; the absorption identity uses its own exhaustive
/// range j+m <= 40 regardless.
struct Bounds {
    long max_m = 12;
    long max_n = 12;
    long max_q = 12;
};

struct SweepOptions {
    bool strict_parity = false;  // printed parity reading of ak_const_4
    bool corrupt_first = false;  // test hook: perturb the first record's left side
};

namespace detail {

inline std::string kv(const char* k, long v) { return std::string(k) + "=" + std::to_string(v); }

class CorruptOnce {
public:
    explicit CorruptOnce(bool armed) : armed_(armed) {}
    bool fire() {
        if (!armed_) return false;
        armed_ = false;
        return true;
    }

private:
    bool armed_;
};

}  // namespace detail

/// Enumerates every parameter tuple of `family` admissible within `bounds`,
/// verifies each instance, and returns the records in ascending tuple order.
inline std::vector<VerificationRecord> sweep(Family family, const Bounds& bounds,
                                             const SweepOptions& opts = {}) {
    using detail::kv;
    std::vector<VerificationRecord> out;
    detail::CorruptOnce corrupt(opts.corrupt_first);

    switch (family) {
        case Family::Thm1_1:
            for (long m = 1; m <= bounds.max_m; ++m)
                for (long nu = 0; nu <= m; ++nu) {
                    const auto [lhs, rhs] = build_thm1_part1(m, nu);
                    out.push_back(make_record("thm1_1", kv("m", m) + "," + kv("nu", nu), lhs, rhs,
                                              corrupt.fire()));
                }
            break;
        case Family::Thm1_2:
            for (long m = 1; m <= bounds.max_m; ++m)
                for (long nu = 0; nu <= m - 1; ++nu) {
                    const auto [lhs, rhs] = build_thm1_part2(m, nu);
                    out.push_back(make_record("thm1_2", kv("m", m) + "," + kv("nu", nu), lhs, rhs,
                                              corrupt.fire()));
                }
            break;
        case Family::Thm1_3:
            for (long m = 1; m <= bounds.max_m; ++m)
                for (long nu = 0; nu <= m - 1; ++nu)
                    for (long ell = 0; ell <= m - nu - 1; ++ell) {
                        const auto [lhs, rhs] = build_thm1_part3(m, nu, ell);
                        out.push_back(make_record(
                            "thm1_3", kv("m", m) + "," + kv("nu", nu) + "," + kv("ell", ell), lhs,
                            rhs, corrupt.fire()));
                    }
            break;
        case Family::Thm1_4:
            for (long m = 1; m <= bounds.max_m; ++m)
                for (long nu = 0; nu <= m; ++nu)
                    for (long ell = 0; ell <= m - 1; ++ell) {
                        const auto [lhs, rhs] = build_thm1_part4(m, nu, ell);
                        out.push_back(make_record(
                            "thm1_4", kv("m", m) + "," + kv("nu", nu) + "," + kv("ell", ell), lhs,
                            rhs, corrupt.fire()));
                    }
            break;
        case Family::Cor1:
        case Family::Cor2: {
            const int part = family == Family::Cor1 ? 1 : 2;
            const std::string tag = part == 1 ? "cor1" : "cor2";
            for (long m = 1; m <= bounds.max_m; ++m)
                for (long ell = 0; ell <= m - 1; ++ell) {
                    const auto [lhs, rhs] = build_corollary(part, m, ell);
                    out.push_back(make_record(tag, kv("m", m) + "," + kv("ell", ell), lhs, rhs,
                                              corrupt.fire()));
                }
            break;
        }
        case Family::AlzerKwongPoly:
            for (long m = 1; m <= bounds.max_m; ++m)
                for (long nu = 0; nu <= m; ++nu) {
                    const auto [lhs, rhs] = build_alzer_kwong_poly(m, nu);
                    out.push_back(make_record("alzer_kwong_poly", kv("m", m) + "," + kv("nu", nu),
                                              lhs, rhs, corrupt.fire()));
                }
            break;
        case Family::AkConst1:
            for (long m = 1; m <= bounds.max_m; ++m)
                for (long nu = 0; nu <= m; ++nu) {
                    const auto [lhs, rhs] = eval_ak_constant(1, m, nu);
                    out.push_back(make_record("ak_const_1", kv("m", m) + "," + kv("nu", nu), lhs,
                                              rhs, corrupt.fire()));
                }
            break;
        case Family::AkConst2:
            for (long m = 1; m <= bounds.max_m; ++m)
                for (long nu = 0; nu <= m - 1; ++nu) {
                    const auto [lhs, rhs] = eval_ak_constant(2, m, nu);
                    out.push_back(make_record("ak_const_2", kv("m", m) + "," + kv("nu", nu), lhs,
                                              rhs, corrupt.fire()));
                }
            break;
        case Family::AkConst3:
            for (long m = 1; m <= bounds.max_m; ++m)
                for (long nu = 0; nu <= m - 2; ++nu)
                    for (long ell = 0; ell <= m - nu - 2; ++ell) {
                        const auto [lhs, rhs] = eval_ak_constant(3, m, nu, ell);
                        out.push_back(make_record(
                            "ak_const_3", kv("m", m) + "," + kv("nu", nu) + "," + kv("ell", ell),
                            lhs, rhs, corrupt.fire()));
                    }
            break;
        case Family::AkConst4:
            for (long m = 1; m <= bounds.max_m; ++m)
                for (long nu = 0; nu <= m; ++nu)
                    for (long ell = 0; ell <= m - 1; ++ell) {
                        const auto [lhs, rhs] =
                            eval_ak_constant(4, m, nu, ell, opts.strict_parity);
                        out.push_back(make_record(
                            "ak_const_4", kv("m", m) + "," + kv("nu", nu) + "," + kv("ell", ell),
                            lhs, rhs, corrupt.fire()));
                    }
            break;
        case Family::WuSunPan:
            for (long m = 1; m <= bounds.max_m; ++m)
                for (long n = 1; n <= bounds.max_n; ++n) {
                    const auto [lhs, rhs] = build_wu_sun_pan(m, n);
                    out.push_back(make_record("wu_sun_pan", kv("m", m) + "," + kv("n", n), lhs, rhs,
                                              corrupt.fire()));
                }
            break;
        case Family::MomiyamaExt:
            for (long q = 0; q <= bounds.max_q; ++q)
                for (long m = 0; m <= bounds.max_m; ++m)
                    for (long n = 0; n <= bounds.max_n; ++n) {
                        if (m + n == 0) continue;
                        const auto [lhs, rhs] = build_momiyama_ext(q, m, n);
                        out.push_back(make_record(
                            "momiyama_ext", kv("q", q) + "," + kv("m", m) + "," + kv("n", n), lhs,
                            rhs, corrupt.fire()));
                    }
            break;
        case Family::Kaneko:
            for (long n = 1; n <= bounds.max_n; ++n)
                out.push_back(
                    make_record("kaneko", kv("n", n), eval_kaneko(n), Rational(0), corrupt.fire()));
            break;
        case Family::ThmBinomShift:
            for (long m = 0; m <= bounds.max_m; ++m)
                for (long n = 0; n <= bounds.max_n; ++n) {
                    if (m + n == 0) continue;
                    // beyond nu = m+n every term vanishes, so that is the
                    // whole nontrivial range
                    for (long nu = 0; nu <= m + n; ++nu) {
                        const auto [lhs, rhs] = build_binom_shift(nu, m, n);
                        out.push_back(make_record(
                            "thm_binom_shift", kv("nu", nu) + "," + kv("m", m) + "," + kv("n", n),
                            lhs, rhs, corrupt.fire()));
                    }
                }
            break;
        case Family::SunTrivariate:
            for (long m = 0; m <= bounds.max_m; ++m)
                for (long n = 0; n <= bounds.max_n; ++n) {
                    const auto [lhs, rhs] = build_sun(m, n);
                    out.push_back(make_record("sun_trivariate", kv("m", m) + "," + kv("n", n), lhs,
                                              rhs, corrupt.fire()));
                }
            break;
        case Family::StepBinom:
            for (long j = 0; j <= 40; ++j)
                for (long m = (j == 0 ? 1 : 0); j + m <= 40; ++m)
                    for (long nu = 0; nu <= j + m; ++nu) {
                        const auto [lhs, rhs] = eval_step_binom(j, m, nu);
                        out.push_back(make_record(
                            "step_binom", kv("j", j) + "," + kv("m", m) + "," + kv("nu", nu), lhs,
                            rhs, corrupt.fire()));
                    }
            break;
        case Family::StepRDifference:
            for (long m = 1; m <= bounds.max_m; ++m)
                for (long nu = 0; nu <= m; ++nu)
                    out.push_back(check_step_r_difference(m, nu, corrupt.fire()));
            break;
        case Family::StepRDerivValue:
            for (long m = 1; m <= bounds.max_m; ++m)
                for (long nu = 0; nu <= m; ++nu)
                    out.push_back(check_step_r_deriv_value(m, nu, corrupt.fire()));
            break;
        case Family::StepHSymmetry:
            for (long q = 0; q <= bounds.max_q; ++q)
                for (long m = 0; m <= bounds.max_m; ++m)
                    for (long n = 0; n <= bounds.max_n; ++n) {
                        if (m + n == 0) continue;
                        out.push_back(check_step_h_symmetry(q, m, n, corrupt.fire()));
                    }
            break;
        case Family::StepGExpansion:
            for (long m = 1; m <= bounds.max_m; ++m)
                for (long n = 1; n <= bounds.max_n; ++n)
                    out.push_back(check_step_g_expansion(m, n, corrupt.fire()));
            break;
        case Family::StepThm4P1:
            for (long m = 0; m <= bounds.max_m; ++m)
                for (long n = 0; n <= bounds.max_n; ++n) {
                    if (m + n == 0) continue;
                    for (long nu = 0; nu <= m + n; ++nu)
                        out.push_back(check_step_thm4_p1(nu, m, n, corrupt.fire()));
                }
            break;
        case Family::StepLExpansion:
            for (long m = 0; m <= bounds.max_m; ++m)
                for (long n = 0; n <= bounds.max_n; ++n)
                    out.push_back(check_step_l_expansion(m, n, corrupt.fire()));
            break;
    }
    return out;
}

/// Witt cross-check: the numerically stabilized Volkenborn value of
/// (x0 + t)^n against the p-adic image of B_n(x0). The two legs share no
/// machinery — power sums on one side, the Bernoulli recurrence on the other.
inline VerificationRecord check_witt_oracle(long n, long x0, long p, long M) {
    const Poly f = Poly::monomial(n, Rational(1), "t").shift(Rational(x0));
    const VolkenbornSeries series = volkenborn_converge(f, p, M);
    const PadicNumber expected = rational_to_padic(bernoulli_at(n, Rational(x0)), p, M);
    const std::string params = detail::kv("n", n) + "," + detail::kv("x0", x0) + "," +
                               detail::kv("p", p) + "," + detail::kv("M", M);
    if (!series.stabilized) {
        return VerificationRecord{"witt_oracle", params, false, "(not stabilized)",
                                  expected.to_string(),
                                  "no stabilization within N <= " +
                                      std::to_string(M + (f.degree() < 0 ? 0 : f.degree()) + 4)};
    }
    VerificationRecord rec{"witt_oracle",         params, series.value == expected,
                           series.value.to_string(), expected.to_string(), ""};
    if (!rec.pass)
        rec.mismatch = "value: lhs " + rec.lhs + ", rhs " + rec.rhs;
    return rec;
}

inline std::vector<VerificationRecord> sweep_lemma1(const Bounds& bounds, long p) {
    std::vector<VerificationRecord> out;
    for (long n = 0; n <= bounds.max_m + bounds.max_n; ++n)
        out.push_back(check_lemma1(Poly::monomial(n, Rational(1), "t"), p));
    return out;
}

inline std::vector<VerificationRecord> sweep_functional_equation(const Bounds& bounds) {
    std::vector<VerificationRecord> out;
    for (long n = 0; n <= bounds.max_m; ++n)
        for (long r = 1; r <= 3; ++r)
            out.push_back(
                check_functional_equation(Poly::monomial(n, Rational(1), "t"), Rational(1, 2), r));
    return out;
}

inline std::vector<VerificationRecord> sweep_witt_oracle(const Bounds& bounds,
                                                         const std::vector<long>& primes, long M) {
    std::vector<VerificationRecord> out;
    for (const long p : primes)
        for (long n = 0; n <= bounds.max_m; ++n)
            for (long x0 = 0; x0 <= 2; ++x0) out.push_back(check_witt_oracle(n, x0, p, M));
    return out;
}

}  // namespace bpv
