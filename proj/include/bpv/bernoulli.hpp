#pragma once

#include <mutex>
#include <stdexcept>
#include <vector>

#include "bpv/binomial.hpp"
#include "bpv/poly.hpp"
#include "bpv/rational.hpp"

namespace bpv {

/// Bernoulli numbers B_n and Bernoulli polynomials B_n(x), computed exactly
/// and memoized. Conventions: B_0 = 1, B_1 = -1/2, B_n = B_n(0).
///
/// Numbers come from the recurrence sum_{j=0}^{n} C(n+1, j) B_j = 0;
/// polynomials from the defining sum B_n(x) = sum_j C(n, j) x^{n-j} B_j.
/// The reflected (B_n(-x)) and shifted (B_n(x+1)) forms show up in every
/// sweep of the reflection-type identity families, so they are cached too —
/// always produced by exact composition, never by a closed-form shortcut.
///
/// Growth is serialized by a mutex; entries are returned by value, so
/// concurrent callers never observe partial state.
class BernoulliCache {
public:
    Rational number(long n) {
        check(n);
        std::lock_guard<std::mutex> lock(mu_);
        grow_numbers(n);
        return numbers_[static_cast<size_t>(n)];
    }

    Poly polynomial(long n) {
        check(n);
        std::lock_guard<std::mutex> lock(mu_);
        grow_polynomials(n);
        return polys_[static_cast<size_t>(n)];
    }

    /// B_n(-x)
    Poly polynomial_reflected(long n) {
        check(n);
        std::lock_guard<std::mutex> lock(mu_);
        grow_polynomials(n);
        while (static_cast<long>(polys_neg_.size()) <= n)
            polys_neg_.push_back(polys_[polys_neg_.size()].compose(-Poly::variable("x")));
        return polys_neg_[static_cast<size_t>(n)];
    }

    /// B_n(x+1)
    Poly polynomial_shifted(long n) {
        check(n);
        std::lock_guard<std::mutex> lock(mu_);
        grow_polynomials(n);
        while (static_cast<long>(polys_sh1_.size()) <= n)
            polys_sh1_.push_back(polys_[polys_sh1_.size()].shift(Rational(1)));
        return polys_sh1_[static_cast<size_t>(n)];
    }

    Rational at(long n, const Rational& a) { return polynomial(n).eval(a); }

private:
    static void check(long n) {
        if (n < 0) throw std::domain_error("Bernoulli: negative index");
    }

    void grow_numbers(long n) {
        if (numbers_.empty()) numbers_.push_back(Rational(1));
        while (static_cast<long>(numbers_.size()) <= n) {
            const long i = static_cast<long>(numbers_.size());
            Rational acc(0);
            for (long j = 0; j < i; ++j)
                acc += Rational(binomial(i + 1, j)) * numbers_[static_cast<size_t>(j)];
            numbers_.push_back(-acc / Rational(i + 1));
        }
    }

    void grow_polynomials(long n) {
        grow_numbers(n);
        while (static_cast<long>(polys_.size()) <= n) {
            const long i = static_cast<long>(polys_.size());
            Poly p("x");
            for (long j = 0; j <= i; ++j)
                p += Rational(binomial(i, j)) * numbers_[static_cast<size_t>(j)] *
                     Poly::monomial(i - j, Rational(1), "x");
            polys_.push_back(std::move(p));
        }
    }

    std::mutex mu_;
    std::vector<Rational> numbers_;
    std::vector<Poly> polys_;
    std::vector<Poly> polys_neg_;
    std::vector<Poly> polys_sh1_;
};

inline BernoulliCache& bernoulli_cache() {
    static BernoulliCache cache;
    return cache;
}

inline Rational bernoulli_number(long n) { return bernoulli_cache().number(n); }
inline Poly bernoulli_polynomial(long n) { return bernoulli_cache().polynomial(n); }
inline Poly bernoulli_polynomial_reflected(long n) { return bernoulli_cache().polynomial_reflected(n); }
inline Poly bernoulli_polynomial_shifted(long n) { return bernoulli_cache().polynomial_shifted(n); }
inline Rational bernoulli_at(long n, const Rational& a) { return bernoulli_cache().at(n, a); }

}  // namespace bpv
