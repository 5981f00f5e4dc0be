#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "bpv/bernoulli.hpp"
#include "bpv/binomial.hpp"
#include "bpv/bipoly.hpp"
#include "bpv/identities.hpp"
#include "bpv/record.hpp"
#include "bpv/volkenborn.hpp"

namespace bpv {

// Checks for the intermediate identities that the theorem proofs run on.
// Every check builds both sides from first principles in the bivariate ring —
// the left by explicit differentiation/substitution on an auxiliary product,
// the right from the closed-form sum — and compares exactly.

namespace steps {

inline const BiPoly::Vars kTX{"t", "x"};

inline BiPoly t_var() { return BiPoly::var(0, kTX); }
inline BiPoly x_var() { return BiPoly::var(1, kTX); }
inline BiPoly tx_const(long v) { return BiPoly::constant(Rational(v), kTX); }

/// R(t;x) = (x+t)^m (x+t-1)^m.
inline BiPoly aux_r(long m) {
    const BiPoly xt = x_var() + t_var();
    return xt.pow(static_cast<unsigned long>(m)) *
           (xt - tx_const(1)).pow(static_cast<unsigned long>(m));
}

/// Powers of (x+t) up to degree `top`, shared by the closed-form sums.
inline std::vector<BiPoly> xt_powers(long top) {
    std::vector<BiPoly> p{tx_const(1)};
    const BiPoly xt = x_var() + t_var();
    for (long i = 1; i <= top; ++i) p.push_back(p.back() * xt);
    return p;
}

inline std::vector<BiPoly> powers_of(const BiPoly& base, long top) {
    std::vector<BiPoly> p{BiPoly::constant(Rational(1), base.indeterminates())};
    for (long i = 1; i <= top; ++i) p.push_back(p.back() * base);
    return p;
}

}  // namespace steps

/// C(j+m,nu)(j+m-nu) = C(j+m-1,nu)(j+m), the absorption identity every
/// closed-form right side leans on. Valid for 0 <= nu <= j+m.
inline RationalPair eval_step_binom(long j, long m, long nu) {
    detail::require(j >= 0 && m >= 0 && j + m >= 1, "absorption identity needs j+m >= 1");
    detail::require(0 <= nu && nu <= j + m, "absorption identity needs 0 <= nu <= j+m");
    const Rational lhs = Rational(binomial(j + m, nu)) * Rational(j + m - nu);
    const Rational rhs = Rational(binomial(j + m - 1, nu)) * Rational(j + m);
    return {lhs, rhs};
}

/// nu-th t-derivative of R(t+1;x) - R(t;x) against its parity-filtered
/// closed form 2 nu! sum_{k+m odd} C(m,k) C(k+m,nu) (x+t)^{k+m-nu}.
inline VerificationRecord check_step_r_difference(long m, long nu, bool corrupt = false) {
    detail::require(m >= 1, "difference expansion needs m >= 1");
    detail::require(0 <= nu && nu <= m, "difference expansion needs 0 <= nu <= m");
    const BiPoly r = steps::aux_r(m);
    const BiPoly r_nu = r.derivative(0, static_cast<unsigned long>(nu));
    const BiPoly lhs = r_nu.substitute(0, steps::t_var() + steps::tx_const(1)) - r_nu;

    const auto xt = steps::xt_powers(2 * m);
    BiPoly rhs(steps::kTX);
    const Rational scale = Rational(2) * Rational(factorial(nu));
    for (long k = 0; k <= m - 1; ++k) {
        if ((k + m) % 2 == 0) continue;
        const BigInt c = binomial(m, k) * binomial(k + m, nu);
        if (c.is_zero()) continue;
        rhs += scale * Rational(c) * xt[static_cast<size_t>(k + m - nu)];
    }

    CheckSet checks("step_r_difference", "m=" + std::to_string(m) + ",nu=" + std::to_string(nu),
                    corrupt);
    checks.add("shift difference", lhs, rhs);
    return checks.finish();
}

/// R^{(nu+1)}(0;x) against nu! sum_j (-1)^{j+m} C(m,j) C(j+m-1,nu) (j+m)
/// x^{j+m-nu-1}, plus the (m-nu)-fold derivative form in both of its printed
/// shapes — their agreement is exactly the absorption identity at work.
inline VerificationRecord check_step_r_deriv_value(long m, long nu, bool corrupt = false) {
    detail::require(m >= 1, "derivative value needs m >= 1");
    detail::require(0 <= nu && nu <= m, "derivative value needs 0 <= nu <= m");
    const BiPoly r_nu1 = steps::aux_r(m).derivative(0, static_cast<unsigned long>(nu) + 1);
    const Poly at_zero = r_nu1.substitute_value(0, Rational(0)).to_poly(1);

    Poly value_sum("x");
    const Rational nu_fact = Rational(factorial(nu));
    for (long j = 0; j <= m; ++j) {
        const BigInt c = binomial(m, j) * binomial(j + m - 1, nu) * BigInt(j + m);
        if (c.is_zero()) continue;
        value_sum += detail::monomial_sum_term(j + m - nu - 1,
                                               detail::sign_pow(j + m) * nu_fact * Rational(c));
    }

    CheckSet checks("step_r_deriv_value", "m=" + std::to_string(m) + ",nu=" + std::to_string(nu),
                    corrupt);
    checks.add("value at 0", at_zero, value_sum);

    const Poly deep = r_nu1.derivative(0, static_cast<unsigned long>(m - nu))
                          .substitute_value(0, Rational(0))
                          .to_poly(1);
    const Rational scale = nu_fact * Rational(factorial(m - nu));
    Poly deep_raw("x");
    Poly deep_absorbed("x");
    for (long j = 0; j <= m - 1; ++j) {
        const Rational sgn = detail::sign_pow(j + m + 1);
        const BigInt shared = binomial(m, j + 1) * binomial(j + m - nu, m - nu);
        const BigInt raw = shared * binomial(j + m + 1, nu) * BigInt(j + m - nu + 1);
        const BigInt absorbed = shared * binomial(j + m, nu) * BigInt(j + m + 1);
        if (!raw.is_zero()) deep_raw += detail::monomial_sum_term(j, sgn * scale * Rational(raw));
        if (!absorbed.is_zero())
            deep_absorbed += detail::monomial_sum_term(j, sgn * scale * Rational(absorbed));
    }
    checks.add("deep derivative at 0", deep, deep_raw);
    checks.add("absorbed coefficient form", deep_raw, deep_absorbed);
    return checks.finish();
}

/// H(t;x) = (x+t)^{m+q}(x+t-1)^{n+q} + (-1)^{m+n}(-x+t)^{n+q}(-x+t-1)^{m+q}.
/// Verifies the reflection symmetry H(-t;x) = H(t+1;x), the binomial
/// expansion of H'(t+1;x), and that H'(t+1;x) integrates to zero over Z_p.
inline VerificationRecord check_step_h_symmetry(long q, long m, long n, bool corrupt = false) {
    detail::require(q >= 0 && m >= 0 && n >= 0, "symmetry check needs nonnegative q, m, n");
    detail::require(m + n > 0, "symmetry check needs m+n > 0");
    const BiPoly t = steps::t_var();
    const BiPoly x = steps::x_var();
    const BiPoly one = steps::tx_const(1);
    const BiPoly xt = x + t;
    const BiPoly tx = t - x;  // (-x+t)
    const BiPoly h = xt.pow(static_cast<unsigned long>(m + q)) *
                         (xt - one).pow(static_cast<unsigned long>(n + q)) +
                     detail::sign_pow(m + n) * (tx.pow(static_cast<unsigned long>(n + q)) *
                                                (tx - one).pow(static_cast<unsigned long>(m + q)));

    const std::string params =
        "q=" + std::to_string(q) + ",m=" + std::to_string(m) + ",n=" + std::to_string(n);
    CheckSet checks("step_h_symmetry", params, corrupt);
    checks.add("reflection symmetry", h.substitute(0, -t), h.substitute(0, t + one));

    const BiPoly hp_shift = h.derivative(0).substitute(0, t + one);
    const auto xt_pow = steps::powers_of(xt, m + n + 2 * q);
    const auto tx_pow = steps::powers_of(tx, m + n + 2 * q);
    BiPoly expansion(steps::kTX);
    for (long j = 0; j <= m + q; ++j) {
        if (n + q + j == 0) continue;
        expansion += Rational(binomial(m + q, j) * BigInt(n + q + j)) *
                     xt_pow[static_cast<size_t>(n + q + j - 1)];
    }
    for (long k = 0; k <= n + q; ++k) {
        if (m + q + k == 0) continue;
        expansion += detail::sign_pow(m + n) * Rational(binomial(n + q, k) * BigInt(m + q + k)) *
                     tx_pow[static_cast<size_t>(m + q + k - 1)];
    }
    checks.add("derivative expansion", hp_shift, expansion);
    checks.add("derivative integrates to zero", volkenborn_integrate_slot(hp_shift, 0), Poly("x"));
    return checks.finish();
}

/// G(t;x) = (-1)^m (x+t)^m (x+t-1)^n and its two binomial expansions
/// G(-t;x) = (-1)^n sum_k C(n,k)(-x+t)^{m+k},
/// G(t+1;x) = (-1)^m sum_k C(m,k)(x+t)^{n+k}.
inline VerificationRecord check_step_g_expansion(long m, long n, bool corrupt = false) {
    detail::require(m >= 1 && n >= 1, "expansion check needs m, n >= 1");
    const BiPoly t = steps::t_var();
    const BiPoly x = steps::x_var();
    const BiPoly one = steps::tx_const(1);
    const BiPoly xt = x + t;
    const BiPoly tx = t - x;
    const BiPoly g = detail::sign_pow(m) * (xt.pow(static_cast<unsigned long>(m)) *
                                            (xt - one).pow(static_cast<unsigned long>(n)));

    const auto xt_pow = steps::powers_of(xt, m + n);
    const auto tx_pow = steps::powers_of(tx, m + n);
    BiPoly refl(steps::kTX);
    for (long k = 0; k <= n; ++k)
        refl += Rational(binomial(n, k)) * tx_pow[static_cast<size_t>(m + k)];
    BiPoly shift(steps::kTX);
    for (long k = 0; k <= m; ++k)
        shift += Rational(binomial(m, k)) * xt_pow[static_cast<size_t>(n + k)];

    CheckSet checks("step_g_expansion", "m=" + std::to_string(m) + ",n=" + std::to_string(n),
                    corrupt);
    checks.add("reflected expansion", g.substitute(0, -t), detail::sign_pow(n) * refl);
    checks.add("shifted expansion", g.substitute(0, t + one), detail::sign_pow(m) * shift);
    return checks.finish();
}

/// The shifted-power pair behind the B(x) vs B(x+1) identity:
///   sum_j C(m,j)(x+t)^{n+j} = sum_k (-1)^{n-k} C(n,k)(x+t+1)^{m+k}
/// together with its nu-fold t-derivative.
inline VerificationRecord check_step_thm4_p1(long nu, long m, long n, bool corrupt = false) {
    detail::require(nu >= 0 && m >= 0 && n >= 0, "shifted-power check needs nonnegative nu, m, n");
    detail::require(m + n > 0, "shifted-power check needs m+n > 0");
    const BiPoly xt = steps::x_var() + steps::t_var();
    const BiPoly xt1 = xt + steps::tx_const(1);
    const auto xt_pow = steps::powers_of(xt, m + n);
    const auto xt1_pow = steps::powers_of(xt1, m + n);

    BiPoly lhs(steps::kTX);
    for (long j = 0; j <= m; ++j)
        lhs += Rational(binomial(m, j)) * xt_pow[static_cast<size_t>(n + j)];
    BiPoly rhs(steps::kTX);
    for (long k = 0; k <= n; ++k)
        rhs += detail::sign_pow(n - k) * Rational(binomial(n, k)) *
               xt1_pow[static_cast<size_t>(m + k)];

    const std::string params =
        "nu=" + std::to_string(nu) + ",m=" + std::to_string(m) + ",n=" + std::to_string(n);
    CheckSet checks("step_thm4_p1", params, corrupt);
    checks.add("power identity", lhs, rhs);

    BiPoly dlhs(steps::kTX);
    for (long j = 0; j <= m; ++j) {
        const BigInt c = binomial(m, j) * binomial(n + j, nu);
        if (c.is_zero()) continue;
        dlhs += Rational(c) * xt_pow[static_cast<size_t>(n + j - nu)];
    }
    BiPoly drhs(steps::kTX);
    for (long k = 0; k <= n; ++k) {
        const BigInt c = binomial(n, k) * binomial(m + k, nu);
        if (c.is_zero()) continue;
        drhs += detail::sign_pow(n - k) * Rational(c) * xt1_pow[static_cast<size_t>(m + k - nu)];
    }
    checks.add("derivative identity", dlhs, drhs);
    return checks.finish();
}

/// L(t;x) = (-1)^m (y-1+t)^n (y+x-1+t)^m and its two expansions
///   L(t+1;x) = (-1)^m sum_j C(m,j) x^{m-j} (t+y)^{n+j},
///   L(-t;x)  = (-1)^n sum_k C(n,k) x^{n-k} (t+z)^{m+k},   z = 1-x-y.
/// Verified as (t, y)-polynomial identities at max(m,n)+2 rational values of
/// x. Both differences have degree <= max(m,n) in x, so agreement at that
/// many samples already proves the trivariate identity.
inline VerificationRecord check_step_l_expansion(long m, long n, bool corrupt = false) {
    detail::require(m >= 0 && n >= 0, "expansion check needs nonnegative m, n");
    const BiPoly::Vars ty{"t", "y"};
    const BiPoly t = BiPoly::var(0, ty);
    const BiPoly y = BiPoly::var(1, ty);
    const BiPoly one = BiPoly::constant(Rational(1), ty);

    CheckSet checks("step_l_expansion", "m=" + std::to_string(m) + ",n=" + std::to_string(n),
                    corrupt);
    const long samples = std::max(m, n) + 2;
    for (long c = 0; c < samples; ++c) {
        const Rational xv(c);
        const BiPoly l = detail::sign_pow(m) *
                         ((y - one + t).pow(static_cast<unsigned long>(n)) *
                          (y + BiPoly::constant(xv, ty) - one + t).pow(static_cast<unsigned long>(m)));

        const auto ty_pow = steps::powers_of(t + y, m + n);
        BiPoly p1(ty);
        for (long j = 0; j <= m; ++j)
            p1 += Rational(binomial(m, j)) * pow(xv, static_cast<unsigned long>(m - j)) *
                  ty_pow[static_cast<size_t>(n + j)];
        checks.add("shift expansion at x=" + std::to_string(c),
                   l.substitute(0, t + one), detail::sign_pow(m) * p1);

        const BiPoly z = one - BiPoly::constant(xv, ty) - y;
        const auto tz_pow = steps::powers_of(t + z, m + n);
        BiPoly p2(ty);
        for (long k = 0; k <= n; ++k)
            p2 += Rational(binomial(n, k)) * pow(xv, static_cast<unsigned long>(n - k)) *
                  tz_pow[static_cast<size_t>(m + k)];
        checks.add("reflection expansion at x=" + std::to_string(c),
                   l.substitute(0, -t), detail::sign_pow(n) * p2);
    }
    return checks.finish();
}

}  // namespace bpv
