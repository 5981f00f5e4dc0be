#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "bpv/bernoulli.hpp"
#include "bpv/binomial.hpp"
#include "bpv/bipoly.hpp"
#include "bpv/poly.hpp"
#include "bpv/rational.hpp"

namespace bpv {

// Builders for the Bernoulli-polynomial identity families. Each builder
// constructs BOTH sides of one identity instance from first principles —
// the left side through Bernoulli polynomials, the right side through plain
// monomials — so that comparing them is a genuine two-route check.
//
// Conventions used throughout:
//   * parity-restricted sums keep an explicit `(k + m) odd` predicate on the
//     running index instead of reindexing, mirroring the printed form;
//   * out-of-range binomials vanish, and a term is skipped the moment its
//     integer coefficient is zero, so no negative Bernoulli index or negative
//     monomial exponent is ever constructed.

using PolyPair = std::pair<Poly, Poly>;
using BiPolyPair = std::pair<BiPoly, BiPoly>;
using RationalPair = std::pair<Rational, Rational>;

namespace detail {

inline Rational sign_pow(long e) { return (e & 1) ? Rational(-1) : Rational(1); }

inline void require(bool ok, const char* what) {
    if (!ok) throw std::domain_error(std::string("identity constraint violated: ") + what);
}

inline Poly monomial_sum_term(long expn, const Rational& c) {
    if (expn < 0) throw std::logic_error("identity builder produced a negative exponent");
    return Poly::monomial(expn, c, "x");
}

}  // namespace detail

/// Part 1: for m >= 1, 0 <= nu <= m,
///   sum_{k+m odd} C(m,k) C(k+m,nu) C(k+m-nu,m-nu) B_k(x)
///     = 1/2 sum_{j=0}^{m-1} (-1)^{j+m+1} C(m,j+1) C(j+m,nu) C(j+m-nu,m-nu) (j+m+1) x^j.
inline PolyPair build_thm1_part1(long m, long nu) {
    detail::require(m >= 1, "part 1 needs m >= 1");
    detail::require(0 <= nu && nu <= m, "part 1 needs 0 <= nu <= m");
    Poly lhs("x");
    for (long k = 0; k <= m - 1; ++k) {
        if ((k + m) % 2 == 0) continue;
        const BigInt c = binomial(m, k) * binomial(k + m, nu) * binomial(k + m - nu, m - nu);
        if (c.is_zero()) continue;
        lhs += Rational(c) * bernoulli_polynomial(k);
    }
    Poly rhs("x");
    for (long j = 0; j <= m - 1; ++j) {
        const BigInt c = binomial(m, j + 1) * binomial(j + m, nu) * binomial(j + m - nu, m - nu) *
                         BigInt(j + m + 1);
        if (c.is_zero()) continue;
        rhs += detail::monomial_sum_term(j, detail::sign_pow(j + m + 1) * Rational(c) * Rational(1, 2));
    }
    return {lhs, rhs};
}

/// Part 2: for m >= 1, 0 <= nu <= m-1, the B_{k+1}(x) variant.
inline PolyPair build_thm1_part2(long m, long nu) {
    detail::require(m >= 1, "part 2 needs m >= 1");
    detail::require(0 <= nu && nu <= m - 1, "part 2 needs 0 <= nu <= m-1");
    Poly lhs("x");
    for (long k = 0; k <= m - 1; ++k) {
        if ((k + m) % 2 == 0) continue;
        const BigInt c = binomial(m, k) * binomial(k + m, nu) * binomial(k + m - nu, m - nu - 1);
        if (c.is_zero()) continue;
        lhs += Rational(c) * bernoulli_polynomial(k + 1);
    }
    Poly rhs("x");
    for (long j = 0; j <= m; ++j) {
        const BigInt c = binomial(m, j) * binomial(j + m - 1, nu) *
                         binomial(j + m - nu - 1, m - nu - 1) * BigInt(j + m);
        if (c.is_zero()) continue;
        rhs += detail::monomial_sum_term(j, detail::sign_pow(j + m) * Rational(c) * Rational(1, 2));
    }
    return {lhs, rhs};
}

/// Part 3: for m >= 1, 0 <= nu <= m-1, 0 <= ell <= m-nu-1, the
/// B_{k+m-nu-ell}(x) variant against x^{j+m-nu-ell-1}.
inline PolyPair build_thm1_part3(long m, long nu, long ell) {
    detail::require(m >= 1, "part 3 needs m >= 1");
    detail::require(0 <= nu && nu <= m - 1, "part 3 needs 0 <= nu <= m-1");
    detail::require(0 <= ell && ell <= m - nu - 1, "part 3 needs 0 <= ell <= m-nu-1");
    Poly lhs("x");
    for (long k = 0; k <= m - 1; ++k) {
        if ((k + m) % 2 == 0) continue;
        const BigInt c = binomial(m, k) * binomial(k + m, nu) * binomial(k + m - nu, ell);
        if (c.is_zero()) continue;
        lhs += Rational(c) * bernoulli_polynomial(k + m - nu - ell);
    }
    Poly rhs("x");
    for (long j = 0; j <= m; ++j) {
        const BigInt c = binomial(m, j) * binomial(j + m - 1, nu) * binomial(j + m - nu - 1, ell) *
                         BigInt(j + m);
        if (c.is_zero()) continue;
        rhs += detail::monomial_sum_term(j + m - nu - ell - 1,
                                         detail::sign_pow(j + m) * Rational(c) * Rational(1, 2));
    }
    return {lhs, rhs};
}

/// Part 4: for m >= 1, 0 <= nu <= m, 0 <= ell <= m-1,
///   sum_{k=ell, k+m odd} C(m,k) C(k+m,nu) C(k+m-nu,ell+m-nu) B_{k-ell}(x)
///     = 1/2 sum_{j=ell}^{m-1} (-1)^{j+m+1} C(m,j+1) C(j+m,nu)
///                             C(j+m-nu,ell+m-nu) (j+m+1) x^{j-ell}.
/// The right side carries the binomial factor C(j+m-nu, ell+m-nu) produced by
/// the (ell+m-nu)-fold derivative that generates this family member; without
/// it the two sides already disagree at m = 3, nu = 0, ell = 0.
inline PolyPair build_thm1_part4(long m, long nu, long ell) {
    detail::require(m >= 1, "part 4 needs m >= 1");
    detail::require(0 <= nu && nu <= m, "part 4 needs 0 <= nu <= m");
    detail::require(0 <= ell && ell <= m - 1, "part 4 needs 0 <= ell <= m-1");
    Poly lhs("x");
    for (long k = ell; k <= m - 1; ++k) {
        if ((k + m) % 2 == 0) continue;
        const BigInt c =
            binomial(m, k) * binomial(k + m, nu) * binomial(k + m - nu, ell + m - nu);
        if (c.is_zero()) continue;
        lhs += Rational(c) * bernoulli_polynomial(k - ell);
    }
    Poly rhs("x");
    for (long j = ell; j <= m - 1; ++j) {
        const BigInt c = binomial(m, j + 1) * binomial(j + m, nu) *
                         binomial(j + m - nu, ell + m - nu) * BigInt(j + m + 1);
        if (c.is_zero()) continue;
        rhs += detail::monomial_sum_term(j - ell,
                                         detail::sign_pow(j + m + 1) * Rational(c) * Rational(1, 2));
    }
    return {lhs, rhs};
}

/// nu = 0 corollaries of parts 3 and 4; part in {1, 2}, 0 <= ell <= m-1.
inline PolyPair build_corollary(int part, long m, long ell) {
    detail::require(part == 1 || part == 2, "corollary part must be 1 or 2");
    detail::require(m >= 1, "corollary needs m >= 1");
    detail::require(0 <= ell && ell <= m - 1, "corollary needs 0 <= ell <= m-1");
    if (part == 1) {
        Poly lhs("x");
        for (long k = 0; k <= m - 1; ++k) {
            if ((k + m) % 2 == 0) continue;
            const BigInt c = binomial(m, k) * binomial(k + m, ell);
            if (c.is_zero()) continue;
            lhs += Rational(c) * bernoulli_polynomial(k + m - ell);
        }
        Poly rhs("x");
        for (long j = 0; j <= m; ++j) {
            const BigInt c = binomial(m, j) * binomial(j + m - 1, ell) * BigInt(j + m);
            if (c.is_zero()) continue;
            rhs += detail::monomial_sum_term(j + m - ell - 1,
                                             detail::sign_pow(j + m) * Rational(c) * Rational(1, 2));
        }
        return {lhs, rhs};
    }
    Poly lhs("x");
    for (long k = ell; k <= m - 1; ++k) {
        if ((k + m) % 2 == 0) continue;
        const BigInt c = binomial(m, k) * binomial(k + m, ell + m);
        if (c.is_zero()) continue;
        lhs += Rational(c) * bernoulli_polynomial(k - ell);
    }
    Poly rhs("x");
    for (long j = ell; j <= m - 1; ++j) {
        const BigInt c = binomial(m, j + 1) * binomial(j + m, ell + m) * BigInt(j + m + 1);
        if (c.is_zero()) continue;
        rhs += detail::monomial_sum_term(j - ell,
                                         detail::sign_pow(j + m + 1) * Rational(c) * Rational(1, 2));
    }
    return {lhs, rhs};
}

/// The ell-free polynomial identity: for m >= 1, 0 <= nu <= m,
///   sum_{k+m odd} C(m,k) C(k+m,nu) B_{k+m-nu}(x)
///     = 1/2 sum_{j=0}^{m} (-1)^{j+m} C(m,j) C(j+m-1,nu) (j+m) x^{j+m-nu-1}.
inline PolyPair build_alzer_kwong_poly(long m, long nu) {
    detail::require(m >= 1, "alzer-kwong needs m >= 1");
    detail::require(0 <= nu && nu <= m, "alzer-kwong needs 0 <= nu <= m");
    Poly lhs("x");
    for (long k = 0; k <= m - 1; ++k) {
        if ((k + m) % 2 == 0) continue;
        const BigInt c = binomial(m, k) * binomial(k + m, nu);
        if (c.is_zero()) continue;
        lhs += Rational(c) * bernoulli_polynomial(k + m - nu);
    }
    Poly rhs("x");
    for (long j = 0; j <= m; ++j) {
        const BigInt c = binomial(m, j) * binomial(j + m - 1, nu) * BigInt(j + m);
        if (c.is_zero()) continue;
        rhs += detail::monomial_sum_term(j + m - nu - 1,
                                         detail::sign_pow(j + m) * Rational(c) * Rational(1, 2));
    }
    return {lhs, rhs};
}

/// The constant (x = 0) identities. Part 3 evaluates against an exact zero.
/// Part 4's printed summation condition reads "ell+m odd" where every sibling
/// uses "k+m odd"; `strict_parity` selects the printed reading (a gate on the
/// whole sum), the default follows the k-indexed reading that part 4 of the
/// polynomial identity specializes to.
inline RationalPair eval_ak_constant(int part, long m, long nu, long ell = 0,
                                     bool strict_parity = false) {
    detail::require(m >= 1, "constant identities need m >= 1");
    switch (part) {
        case 1: {
            detail::require(0 <= nu && nu <= m, "part 1 needs 0 <= nu <= m");
            Rational lhs(0);
            for (long k = 0; k <= m - 1; ++k) {
                if ((k + m) % 2 == 0) continue;
                const BigInt c =
                    binomial(m, k) * binomial(k + m, nu) * binomial(k + m - nu, m - nu);
                lhs += Rational(c) * bernoulli_number(k);
            }
            const Rational rhs = detail::sign_pow(m + 1) * Rational(m * (m + 1), 2) *
                                 Rational(binomial(m, nu));
            return {lhs, rhs};
        }
        case 2: {
            detail::require(0 <= nu && nu <= m - 1, "part 2 needs 0 <= nu <= m-1");
            Rational lhs(0);
            for (long k = 0; k <= m - 1; ++k) {
                if ((k + m) % 2 == 0) continue;
                const BigInt c =
                    binomial(m, k) * binomial(k + m, nu) * binomial(k + m - nu, m - 1 - nu);
                lhs += Rational(c) * bernoulli_number(k + 1);
            }
            const Rational rhs = detail::sign_pow(m) * Rational(m, 2) * Rational(binomial(m - 1, nu));
            return {lhs, rhs};
        }
        case 3: {
            detail::require(0 <= nu, "part 3 needs nu >= 0");
            detail::require(0 <= ell && ell <= m - nu - 2, "part 3 needs 0 <= ell <= m-nu-2");
            Rational lhs(0);
            for (long k = 0; k <= m - 1; ++k) {
                if ((k + m) % 2 == 0) continue;
                const BigInt c = binomial(m, k) * binomial(k + m, nu) * binomial(k + m - nu, ell);
                lhs += Rational(c) * bernoulli_number(k + m - nu - ell);
            }
            return {lhs, Rational(0)};
        }
        case 4: {
            detail::require(0 <= nu && nu <= m, "part 4 needs 0 <= nu <= m");
            detail::require(0 <= ell && ell <= m - 1, "part 4 needs 0 <= ell <= m-1");
            Rational lhs(0);
            const bool gate_open = !strict_parity || (ell + m) % 2 == 1;
            for (long k = ell; k <= m - 1 && gate_open; ++k) {
                if (!strict_parity && (k + m) % 2 == 0) continue;
                const BigInt c =
                    binomial(m, k) * binomial(k + m, nu) * binomial(k + m - nu, ell + m - nu);
                lhs += Rational(c) * bernoulli_number(k - ell);
            }
            const Rational rhs = detail::sign_pow(ell + m + 1) * Rational(ell + m + 1, 2) *
                                 Rational(binomial(m, ell + 1)) * Rational(binomial(ell + m, nu));
            return {lhs, rhs};
        }
        default:
            throw std::domain_error("eval_ak_constant: part must be 1..4");
    }
}

/// sum_k C(m,k) B_{n+k}(x) = (-1)^{n+m} sum_k C(n,k) B_{m+k}(-x), m, n >= 1.
inline PolyPair build_wu_sun_pan(long m, long n) {
    detail::require(m >= 1 && n >= 1, "wu-sun-pan needs m, n >= 1");
    Poly lhs("x");
    for (long k = 0; k <= m; ++k)
        lhs += Rational(binomial(m, k)) * bernoulli_polynomial(n + k);
    Poly rhs("x");
    for (long k = 0; k <= n; ++k)
        rhs += Rational(binomial(n, k)) * bernoulli_polynomial_reflected(m + k);
    return {lhs, detail::sign_pow(n + m) * rhs};
}

/// sum_j C(m+q,j)(n+q+j) B_{n+q+j-1}(x)
///   = -(-1)^{m+n} sum_k C(n+q,k)(m+q+k) B_{m+q+k-1}(-x),
/// for q, m, n >= 0 with m+n > 0. Terms whose integer multiplier vanishes are
/// skipped, which is what keeps the Bernoulli index nonnegative.
inline PolyPair build_momiyama_ext(long q, long m, long n) {
    detail::require(q >= 0 && m >= 0 && n >= 0, "extension needs nonnegative q, m, n");
    detail::require(m + n > 0, "extension needs m+n > 0");
    Poly lhs("x");
    for (long j = 0; j <= m + q; ++j) {
        if (n + q + j == 0) continue;
        lhs += Rational(binomial(m + q, j) * BigInt(n + q + j)) *
               bernoulli_polynomial(n + q + j - 1);
    }
    Poly rhs("x");
    for (long k = 0; k <= n + q; ++k) {
        if (m + q + k == 0) continue;
        rhs += Rational(binomial(n + q, k) * BigInt(m + q + k)) *
               bernoulli_polynomial_reflected(m + q + k - 1);
    }
    return {lhs, -detail::sign_pow(m + n) * rhs};
}

/// Kaneko's recurrence: sum_{j=0}^{n+1} C(n+1,j) (n+j+1) B_{n+j} for n >= 1;
/// the contract is that this vanishes.
inline Rational eval_kaneko(long n) {
    detail::require(n >= 1, "kaneko needs n >= 1");
    Rational acc(0);
    for (long j = 0; j <= n + 1; ++j)
        acc += Rational(binomial(n + 1, j) * BigInt(n + j + 1)) * bernoulli_number(n + j);
    return acc;
}

/// sum_j C(m,j) C(n+j,nu) B_{n+j-nu}(x)
///   = sum_k (-1)^{n-k} C(n,k) C(m+k,nu) B_{m+k-nu}(x+1),
/// for nu, m, n >= 0 with m+n > 0. When nu > n+j the vanishing binomial drops
/// the term before a negative Bernoulli index could appear.
inline PolyPair build_binom_shift(long nu, long m, long n) {
    detail::require(nu >= 0 && m >= 0 && n >= 0, "shift identity needs nonnegative nu, m, n");
    detail::require(m + n > 0, "shift identity needs m+n > 0");
    Poly lhs("x");
    for (long j = 0; j <= m; ++j) {
        const BigInt c = binomial(m, j) * binomial(n + j, nu);
        if (c.is_zero()) continue;
        lhs += Rational(c) * bernoulli_polynomial(n + j - nu);
    }
    Poly rhs("x");
    for (long k = 0; k <= n; ++k) {
        const BigInt c = binomial(n, k) * binomial(m + k, nu);
        if (c.is_zero()) continue;
        rhs += detail::sign_pow(n - k) * Rational(c) * bernoulli_polynomial_shifted(m + k - nu);
    }
    return {lhs, rhs};
}

/// Sun's trivariate symmetry with z eliminated through x+y+z = 1:
///   (-1)^m sum_j C(m,j) x^{m-j} B_{n+j}(y)
///     = (-1)^n sum_k C(n,k) x^{n-k} B_{m+k}(1-x-y)
/// as bivariate polynomials in (x, y).
inline BiPolyPair build_sun(long m, long n) {
    detail::require(m >= 0 && n >= 0, "trivariate identity needs nonnegative m, n");
    const BiPoly::Vars xy{"x", "y"};
    const BiPoly x = BiPoly::var(0, xy);
    const BiPoly y = BiPoly::var(1, xy);
    const BiPoly z = BiPoly::constant(Rational(1), xy) - x - y;

    BiPoly lhs(xy);
    for (long j = 0; j <= m; ++j)
        lhs += Rational(binomial(m, j)) *
               (BiPoly::monomial(Rational(1), m - j, 0, xy) *
                BiPoly::from_poly(bernoulli_polynomial(n + j), 1, xy));
    BiPoly rhs(xy);
    for (long k = 0; k <= n; ++k)
        rhs += Rational(binomial(n, k)) *
               (BiPoly::monomial(Rational(1), n - k, 0, xy) *
                compose_poly(bernoulli_polynomial(m + k), z));
    return {detail::sign_pow(m) * lhs, detail::sign_pow(n) * rhs};
}

}  // namespace bpv
