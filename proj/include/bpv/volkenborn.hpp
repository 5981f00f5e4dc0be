#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bpv/bernoulli.hpp"
#include "bpv/bipoly.hpp"
#include "bpv/bigint.hpp"
#include "bpv/binomial.hpp"
#include "bpv/padic.hpp"
#include "bpv/poly.hpp"
#include "bpv/rational.hpp"
#include "bpv/record.hpp"

namespace bpv {

/// Power sums S_k(X) = sum_{j=0}^{X-1} j^k for k = 0..max_k, computed by the
/// telescoping recurrence (k+1) S_k = X^{k+1} - sum_{i<k} C(k+1, i) S_i.
/// Deliberately independent of the Bernoulli recurrence: this is the numeric
/// leg of the Witt cross-check, and it must not share machinery with the
/// exact leg it is checked against.
inline std::vector<BigInt> power_sums(const BigInt& upper, long max_k) {
    if (max_k < 0) throw std::domain_error("power_sums: negative degree");
    std::vector<BigInt> s;
    s.reserve(static_cast<size_t>(max_k) + 1);
    s.push_back(upper);  // S_0 = X
    for (long k = 1; k <= max_k; ++k) {
        BigInt acc = pow(upper, static_cast<unsigned long>(k) + 1);
        for (long i = 0; i < k; ++i) acc -= binomial(k + 1, i) * s[static_cast<size_t>(i)];
        s.push_back(BigInt::div_exact(acc, BigInt(k + 1)));
    }
    return s;
}

/// S_N = p^{-N} sum_{j=0}^{p^N-1} f(j), exactly. Closed-form power sums keep
/// this cheap even when p^N has billions of terms.
inline Rational volkenborn_partial_sum(const Poly& f, long p, long N) {
    if (!is_prime(p)) throw std::domain_error("volkenborn_partial_sum: modulus must be prime");
    if (N < 0) throw std::domain_error("volkenborn_partial_sum: negative level");
    const BigInt upper = pow(BigInt(p), static_cast<unsigned long>(N));
    const long deg = f.degree() < 0 ? 0 : f.degree();
    const std::vector<BigInt> sums = power_sums(upper, deg);
    Rational acc(0);
    for (long k = 0; k <= f.degree(); ++k) acc += f.coeff(k) * Rational(sums[static_cast<size_t>(k)]);
    return acc / Rational(upper);
}

/// Volkenborn integral of a polynomial over Z_p, via Witt's formula:
/// the integral of t^k is B_k, extended by linearity. Independent of p.
inline Rational volkenborn_exact(const Poly& f) {
    Rational acc(0);
    for (long k = 0; k <= f.degree(); ++k) acc += f.coeff(k) * bernoulli_number(k);
    return acc;
}

/// F(x) = integral of f(x+t) dt with x left symbolic: t^k integrates to the
/// Bernoulli polynomial B_k(x).
inline Poly volkenborn_shifted(const Poly& f) {
    Poly acc("x");
    for (long k = 0; k <= f.degree(); ++k) acc += f.coeff(k) * bernoulli_polynomial(k);
    return acc;
}

/// Integrates a bivariate polynomial over Z_p in the indeterminate of `slot`,
/// leaving the other indeterminate symbolic.
inline Poly volkenborn_integrate_slot(const BiPoly& f, int slot) {
    const int other = slot == 0 ? 1 : 0;
    Poly acc(f.indeterminates()[static_cast<size_t>(other)]);
    for (const auto& [e, c] : f.terms()) {
        const long et = slot == 0 ? e.first : e.second;
        const long eo = slot == 0 ? e.second : e.first;
        acc += Poly::monomial(eo, c * bernoulli_number(et),
                              f.indeterminates()[static_cast<size_t>(other)]);
    }
    return acc;
}

/// One numeric Volkenborn run: the integrand, the partial-sum trail, and the
/// stabilized p-adic value when the trail settles at unit precision M.
struct VolkenbornSeries {
    Poly integrand;
    long prime = 0;
    long precision = 0;
    std::vector<std::pair<long, Rational>> partial_sums;  // (N, S_N)
    PadicNumber value;
    bool stabilized = false;
    long stabilized_at = -1;
};

/// Evaluates the integral limit numerically: iterates N upward until two
/// consecutive partial sums agree in Q_p at unit precision M, or the ceiling
/// N = M + deg(f) + 4 is reached. The rate of stabilization is detected, not
/// assumed. A limit of zero shows up as valuations escaping upward rather
/// than as unit agreement, so that case is detected separately once two
/// consecutive sums sit at valuation >= M + 2.
inline VolkenbornSeries volkenborn_converge(const Poly& f, long p, long M) {
    if (!is_prime(p)) throw std::domain_error("volkenborn_converge: modulus must be prime");
    if (M < 1) throw std::domain_error("volkenborn_converge: precision must be positive");
    VolkenbornSeries out;
    out.integrand = f;
    out.prime = p;
    out.precision = M;

    const long deg = f.degree() < 0 ? 0 : f.degree();
    const long n_max = M + deg + 4;
    const long zero_bar = M + 2;

    for (long n = M + 1; n <= n_max; ++n) {
        out.partial_sums.emplace_back(n, volkenborn_partial_sum(f, p, n));
        if (out.partial_sums.size() < 2) continue;
        const Rational& prev = out.partial_sums[out.partial_sums.size() - 2].second;
        const Rational& cur = out.partial_sums.back().second;
        const PadicNumber a = rational_to_padic(prev, p, M);
        const PadicNumber b = rational_to_padic(cur, p, M);
        if (a == b) {
            out.value = b;
            out.stabilized = true;
            out.stabilized_at = n;
            return out;
        }
        const bool prev_high = prev.is_zero() || padic_valuation(prev, p) >= zero_bar;
        const bool cur_high = cur.is_zero() || padic_valuation(cur, p) >= zero_bar;
        if (prev_high && cur_high) {
            out.value = rational_to_padic(Rational(0), p, M);
            out.stabilized = true;
            out.stabilized_at = n;
            return out;
        }
    }
    return out;
}

/// Checks the reflection/shift functional equation of the Volkenborn
/// integral on a concrete polynomial, exactly in Q:
///   int f(-t) = int f(t+1) = int f(t) + f'(0),
/// and, when f is odd, int f(t) = -f'(0)/2.
inline VerificationRecord check_lemma1(const Poly& f, long p) {
    const Poly freflect = f.reflect();
    const Rational i_neg = volkenborn_exact(freflect);
    const Rational i_shift = volkenborn_exact(f.shift(Rational(1)));
    const Rational i_plain = volkenborn_exact(f);
    const Rational d0 = f.derivative().eval(Rational(0));

    CheckSet checks("lemma1", "f=" + f.to_string() + ",p=" + std::to_string(p));
    checks.add("reflection vs shift", i_neg, i_shift);
    checks.add("shift vs plain + f'(0)", i_shift, i_plain + d0);
    if (freflect == -f) checks.add("odd integrand", i_plain, -d0 / Rational(2));
    return checks.finish();
}

/// Checks F(x+1) - F(x) = f'(x) and the telescoped form
/// F(x+r) - F(x) = sum_{i=0}^{r-1} f'(x+i) as exact polynomial identities,
/// where F(x) = int f(x+t) dt; also spot-evaluates both at x0.
inline VerificationRecord check_functional_equation(const Poly& f, const Rational& x0, long r) {
    if (r < 1) throw std::domain_error("check_functional_equation: step must be positive");
    const Poly big_f = volkenborn_shifted(f);
    const Poly fprime = f.derivative().with_indeterminate("x");

    CheckSet checks("functional_eq",
                    "f=" + f.to_string() + ",x0=" + x0.to_string() + ",r=" + std::to_string(r));
    checks.add("unit shift", big_f.shift(Rational(1)) - big_f, fprime);

    Poly telescoped("x");
    for (long i = 0; i < r; ++i) telescoped += fprime.shift(Rational(i));
    checks.add("telescoped shift", big_f.shift(Rational(r)) - big_f, telescoped);

    checks.add("spot value", (big_f.shift(Rational(1)) - big_f).eval(x0), fprime.eval(x0));
    return checks.finish();
}

}  // namespace bpv
