#pragma once

#include <gmp.h>

#include <ostream>
#include <stdexcept>
#include <string>

#include "bpv/bigint.hpp"

namespace bpv {

/// Exact rational number, always stored in canonical form: positive
/// denominator, gcd(|num|, den) = 1. Wraps GMP's mpq_t. Canonical form is
/// what makes equality a plain structural compare everywhere downstream.
class Rational {
public:
    Rational() { mpq_init(q_); }

    Rational(long v) {
        mpq_init(q_);
        mpq_set_si(q_, v, 1);
    }

    Rational(long num, long den) {
        mpq_init(q_);
        if (den == 0) {
            mpq_clear(q_);
            throw std::domain_error("Rational: zero denominator");
        }
        if (den < 0) {
            num = -num;
            den = -den;
        }
        mpq_set_si(q_, num, static_cast<unsigned long>(den));
        mpq_canonicalize(q_);
    }

    explicit Rational(const BigInt& n) {
        mpq_init(q_);
        mpz_set(mpq_numref(q_), n.raw());
    }

    Rational(const BigInt& num, const BigInt& den) {
        if (den.is_zero()) throw std::domain_error("Rational: zero denominator");
        mpq_init(q_);
        mpz_set(mpq_numref(q_), num.raw());
        mpz_set(mpq_denref(q_), den.raw());
        mpq_canonicalize(q_);
    }

    /// Parses "a" or "a/b" in base 10.
    explicit Rational(const std::string& s) {
        mpq_init(q_);
        if (mpq_set_str(q_, s.c_str(), 10) != 0 || mpz_sgn(mpq_denref(q_)) == 0) {
            mpq_clear(q_);
            throw std::invalid_argument("Rational: malformed literal '" + s + "'");
        }
        mpq_canonicalize(q_);
    }

    Rational(const Rational& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }

    Rational(Rational&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }

    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }

    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }

    ~Rational() { mpq_clear(q_); }

    void swap(Rational& o) noexcept { mpq_swap(q_, o.q_); }

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_one() const { return mpq_cmp_ui(q_, 1, 1) == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
    int sign() const { return mpq_sgn(q_); }

    BigInt numerator() const {
        BigInt n;
        mpz_set(n.raw(), mpq_numref(q_));
        return n;
    }

    BigInt denominator() const {
        BigInt d;
        mpz_set(d.raw(), mpq_denref(q_));
        return d;
    }

    Rational& operator+=(const Rational& o) { mpq_add(q_, q_, o.q_); return *this; }
    Rational& operator-=(const Rational& o) { mpq_sub(q_, q_, o.q_); return *this; }
    Rational& operator*=(const Rational& o) { mpq_mul(q_, q_, o.q_); return *this; }

    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        mpq_div(q_, q_, o.q_);
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    Rational operator-() const {
        Rational r;
        mpq_neg(r.q_, q_);
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) >= 0; }

    friend Rational pow(const Rational& base, unsigned long e) {
        Rational r(1);
        mpz_pow_ui(mpq_numref(r.q_), mpq_numref(base.q_), e);
        mpz_pow_ui(mpq_denref(r.q_), mpq_denref(base.q_), e);
        return r;  // canonical operand => canonical power
    }

    /// "a" when integral, "a/b" otherwise.
    std::string to_string() const {
        char* raw = mpq_get_str(nullptr, 10, q_);
        std::string s(raw);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(raw, s.size() + 1);
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

    mpq_srcptr raw() const { return q_; }

private:
    mpq_t q_;
};

// Namespace-scope declarations so the hidden friends above are reachable by
// qualified lookup too.
Rational pow(const Rational& base, unsigned long e);

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace bpv
