#pragma once

#include <stdexcept>

#include "bpv/bigint.hpp"

namespace bpv {

/// Binomial coefficient C(n, k) with the vanishing convention C(n, k) = 0
/// for k < 0 or k > n. The summation bounds of the identity families rely on
/// that convention to drop out-of-range terms.
///
/// Computed by the multiplicative formula with exact division at each step,
/// which keeps intermediates no larger than the result.
inline BigInt binomial(long n, long k) {
    if (n < 0) throw std::domain_error("binomial: negative upper index");
    if (k < 0 || k > n) return BigInt(0);
    if (k > n - k) k = n - k;
    BigInt r(1);
    for (long i = 1; i <= k; ++i) {
        r *= BigInt(n - k + i);
        r = BigInt::div_exact(r, BigInt(i));
    }
    return r;
}

inline BigInt factorial(long n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    BigInt r(1);
    for (long i = 2; i <= n; ++i) r *= BigInt(i);
    return r;
}

}  // namespace bpv
