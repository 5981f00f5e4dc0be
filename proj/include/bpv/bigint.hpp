#pragma once

#include <gmp.h>

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace bpv {

/// Arbitrary-precision signed integer. Thin value wrapper around GMP's mpz_t;
/// immutable in spirit (all operators return fresh values), so instances can
/// be shared freely between threads once constructed.
class BigInt {
public:
    BigInt() { mpz_init(z_); }

    BigInt(long v) { mpz_init_set_si(z_, v); }

    explicit BigInt(const std::string& s) {
        if (mpz_init_set_str(z_, s.c_str(), 10) != 0) {
            mpz_clear(z_);
            throw std::invalid_argument("BigInt: malformed integer literal '" + s + "'");
        }
    }

    BigInt(const BigInt& o) { mpz_init_set(z_, o.z_); }

    BigInt(BigInt&& o) noexcept {
        mpz_init(z_);
        mpz_swap(z_, o.z_);
    }

    BigInt& operator=(const BigInt& o) {
        if (this != &o) mpz_set(z_, o.z_);
        return *this;
    }

    BigInt& operator=(BigInt&& o) noexcept {
        mpz_swap(z_, o.z_);
        return *this;
    }

    ~BigInt() { mpz_clear(z_); }

    void swap(BigInt& o) noexcept { mpz_swap(z_, o.z_); }

    int sign() const { return mpz_sgn(z_); }
    bool is_zero() const { return mpz_sgn(z_) == 0; }
    bool is_odd() const { return mpz_odd_p(z_) != 0; }

    BigInt& operator+=(const BigInt& o) { mpz_add(z_, z_, o.z_); return *this; }
    BigInt& operator-=(const BigInt& o) { mpz_sub(z_, z_, o.z_); return *this; }
    BigInt& operator*=(const BigInt& o) { mpz_mul(z_, z_, o.z_); return *this; }

    friend BigInt operator+(BigInt a, const BigInt& b) { a += b; return a; }
    friend BigInt operator-(BigInt a, const BigInt& b) { a -= b; return a; }
    friend BigInt operator*(BigInt a, const BigInt& b) { a *= b; return a; }

    BigInt operator-() const {
        BigInt r;
        mpz_neg(r.z_, z_);
        return r;
    }

    /// Quotient a/b when b divides a exactly; anything else is a caller bug.
    static BigInt div_exact(const BigInt& a, const BigInt& b) {
        if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
        BigInt r;
        mpz_divexact(r.z_, a.z_, b.z_);
        return r;
    }

    friend BigInt pow(const BigInt& base, unsigned long e) {
        BigInt r;
        mpz_pow_ui(r.z_, base.z_, e);
        return r;
    }

    friend BigInt gcd(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_gcd(r.z_, a.z_, b.z_);
        return r;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) >= 0; }

    std::string to_string() const {
        char* raw = mpz_get_str(nullptr, 10, z_);
        std::string s(raw);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(raw, s.size() + 1);
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

    // Raw handle for the few places (rational construction, p-adic reduction)
    // that talk to GMP directly.
    mpz_srcptr raw() const { return z_; }
    mpz_ptr raw() { return z_; }

private:
    mpz_t z_;
};

}  // namespace bpv
