#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bpv/binomial.hpp"
#include "bpv/rational.hpp"

namespace bpv {

/// Dense univariate polynomial over Rational in a named indeterminate.
/// Canonical form: the coefficient vector is trimmed so the leading
/// coefficient of a nonzero polynomial is nonzero. Equality is structural.
class Poly {
public:
    explicit Poly(std::string var = "x") : var_(std::move(var)) {}

    Poly(const Rational& c, std::string var = "x") : var_(std::move(var)) {
        if (!c.is_zero()) coeffs_.push_back(c);
    }

    Poly(std::vector<Rational> coeffs, std::string var = "x")
        : coeffs_(std::move(coeffs)), var_(std::move(var)) {
        trim();
    }

    static Poly variable(std::string var = "x") {
        return Poly({Rational(0), Rational(1)}, std::move(var));
    }

    static Poly monomial(long degree, const Rational& c, std::string var = "x") {
        if (degree < 0) throw std::domain_error("Poly: negative exponent");
        std::vector<Rational> v(static_cast<size_t>(degree) + 1, Rational(0));
        v.back() = c;
        return Poly(std::move(v), std::move(var));
    }

    const std::string& indeterminate() const { return var_; }

    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    Rational coeff(long i) const {
        if (i < 0 || i >= static_cast<long>(coeffs_.size())) return Rational(0);
        return coeffs_[static_cast<size_t>(i)];
    }

    Rational leading_coeff() const {
        return coeffs_.empty() ? Rational(0) : coeffs_.back();
    }

    Poly with_indeterminate(std::string var) const {
        Poly r = *this;
        r.var_ = std::move(var);
        return r;
    }

    Poly& operator+=(const Poly& o) {
        const std::string var = merged_var(*this, o);
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
        for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        var_ = var;
        trim();
        return *this;
    }

    Poly& operator-=(const Poly& o) {
        const std::string var = merged_var(*this, o);
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
        for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        var_ = var;
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        const std::string var = merged_var(a, b);
        if (a.is_zero() || b.is_zero()) return Poly(var);
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Poly(std::move(out), var);
    }

    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator*(Poly p, const Rational& c) {
        if (c.is_zero()) return Poly(p.var_);
        for (auto& x : p.coeffs_) x *= c;
        return p;
    }

    friend Poly operator*(const Rational& c, Poly p) { return std::move(p) * c; }

    friend Poly operator/(Poly p, const Rational& c) {
        if (c.is_zero()) throw std::domain_error("Poly: division by zero scalar");
        for (auto& x : p.coeffs_) x /= c;
        return p;
    }

    Poly pow(unsigned long e) const {
        Poly r(Rational(1), var_);
        for (unsigned long i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    /// Formal derivative of the given order (d/dvar applied `order` times).
    Poly derivative(unsigned long order = 1) const {
        Poly r = *this;
        for (unsigned long k = 0; k < order && !r.is_zero(); ++k) {
            std::vector<Rational> out;
            out.reserve(r.coeffs_.size() > 0 ? r.coeffs_.size() - 1 : 0);
            for (size_t i = 1; i < r.coeffs_.size(); ++i)
                out.push_back(r.coeffs_[i] * Rational(static_cast<long>(i)));
            r = Poly(std::move(out), r.var_);
        }
        return r;
    }

    /// p(inner), expanded exactly (Horner).
    Poly compose(const Poly& inner) const {
        const std::string var = inner.is_constant() && !is_constant() ? var_ : inner.var_;
        Poly r(var);
        for (long i = degree(); i >= 0; --i) {
            r = r * inner + Poly(coeffs_[static_cast<size_t>(i)], var);
        }
        return r;
    }

    /// q with q(v) = p(v + c).
    Poly shift(const Rational& c) const {
        if (c.is_zero()) return *this;
        return compose(Poly({c, Rational(1)}, var_));
    }

    /// q with q(v) = p(-v).
    Poly reflect() const {
        Poly r = *this;
        for (size_t i = 1; i < r.coeffs_.size(); i += 2) r.coeffs_[i] = -r.coeffs_[i];
        return r;
    }

    Rational eval(const Rational& a) const {
        Rational r(0);
        for (long i = degree(); i >= 0; --i) r = r * a + coeffs_[static_cast<size_t>(i)];
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.coeffs_ != b.coeffs_) return false;
        // Distinct indeterminates only matter once the value is non-constant.
        return a.is_constant() || a.var_ == b.var_;
    }

    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Canonical rendering: descending degree, explicit signs, rationals as
    /// a/b, e.g. "x^2 - x + 1/6".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (long i = degree(); i >= 0; --i) {
            const Rational& c = coeffs_[static_cast<size_t>(i)];
            if (c.is_zero()) continue;
            const bool neg = c.sign() < 0;
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            const Rational a = neg ? -c : c;
            if (i == 0) {
                out += a.to_string();
            } else {
                if (!a.is_one()) out += a.to_string() + "*";
                out += var_;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    static std::string merged_var(const Poly& a, const Poly& b) {
        if (a.is_constant()) return b.is_constant() ? a.var_ : b.var_;
        if (b.is_constant()) return a.var_;
        if (a.var_ != b.var_)
            throw std::invalid_argument("Poly: indeterminate mismatch (" + a.var_ + " vs " + b.var_ + ")");
        return a.var_;
    }

    std::vector<Rational> coeffs_;  // coeffs_[i] multiplies var^i
    std::string var_;
};

}  // namespace bpv
