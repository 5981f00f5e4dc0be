#pragma once

#include <gmp.h>

#include <stdexcept>
#include <string>
#include <utility>

#include "bpv/bigint.hpp"
#include "bpv/rational.hpp"

namespace bpv {

/// Element of Q_p known to unit precision M: value = unit * p^valuation with
/// the unit coprime to p and reduced into [1, p^M). Negative valuations are
/// routine here — Bernoulli denominators put p below the line. Zero carries
/// a flag instead of a (valuation, unit) pair.
struct PadicNumber {
    long prime = 0;
    long valuation = 0;
    BigInt unit;
    long precision = 0;
    bool zero = true;

    /// Equal when both are zero, or when valuations match and the units agree
    /// modulo p^{min shared precision}.
    friend bool operator==(const PadicNumber& a, const PadicNumber& b) {
        if (a.prime != b.prime) return false;
        if (a.zero || b.zero) return a.zero && b.zero;
        if (a.valuation != b.valuation) return false;
        const long m = a.precision < b.precision ? a.precision : b.precision;
        const BigInt mod = pow(BigInt(a.prime), static_cast<unsigned long>(m));
        BigInt da = a.unit - b.unit;
        BigInt r;
        mpz_mod(r.raw(), da.raw(), mod.raw());
        return r.is_zero();
    }

    friend bool operator!=(const PadicNumber& a, const PadicNumber& b) { return !(a == b); }

    /// e.g. "521 + O(5^4)", "15*2^-1 + O(2^3)".
    std::string to_string() const {
        if (zero) return "0";
        std::string s = unit.to_string();
        if (valuation != 0) s += "*" + std::to_string(prime) + "^" + std::to_string(valuation);
        s += " + O(" + std::to_string(prime) + "^" + std::to_string(valuation + precision) + ")";
        return s;
    }
};

inline bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/// p-adic valuation of a nonzero rational.
inline long padic_valuation(const Rational& r, long p) {
    if (r.is_zero()) throw std::domain_error("padic_valuation: zero has no finite valuation");
    BigInt num = r.numerator();
    BigInt den = r.denominator();
    BigInt prime(p);
    const long vn = static_cast<long>(mpz_remove(num.raw(), num.raw(), prime.raw()));
    const long vd = static_cast<long>(mpz_remove(den.raw(), den.raw(), prime.raw()));
    return vn - vd;
}

/// Exact image of a rational in Q_p, truncated to unit precision M.
inline PadicNumber rational_to_padic(const Rational& r, long p, long M) {
    if (!is_prime(p)) throw std::domain_error("rational_to_padic: modulus must be prime");
    if (M < 1) throw std::domain_error("rational_to_padic: precision must be positive");
    PadicNumber out;
    out.prime = p;
    out.precision = M;
    if (r.is_zero()) return out;

    BigInt num = r.numerator();
    BigInt den = r.denominator();
    BigInt prime(p);
    const long vn = static_cast<long>(mpz_remove(num.raw(), num.raw(), prime.raw()));
    const long vd = static_cast<long>(mpz_remove(den.raw(), den.raw(), prime.raw()));
    out.valuation = vn - vd;
    out.zero = false;

    const BigInt mod = pow(prime, static_cast<unsigned long>(M));
    BigInt dinv;
    if (mpz_invert(dinv.raw(), den.raw(), mod.raw()) == 0)
        throw std::logic_error("rational_to_padic: unit part not invertible");  // unreachable
    BigInt u = num * dinv;
    mpz_mod(u.raw(), u.raw(), mod.raw());
    out.unit = std::move(u);
    return out;
}

}  // namespace bpv
