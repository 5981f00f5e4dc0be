#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bpv/poly.hpp"
#include "bpv/rational.hpp"

namespace bpv {

/// Sparse bivariate polynomial over Rational in an ordered pair of named
/// indeterminates. Terms map (e1, e2) -> nonzero coefficient, so two values
/// are equal exactly when their term maps are equal.
class BiPoly {
public:
    using Vars = std::array<std::string, 2>;
    using Exp = std::pair<long, long>;

    explicit BiPoly(Vars vars) : vars_(std::move(vars)) {}

    BiPoly(std::string v1, std::string v2) : vars_{std::move(v1), std::move(v2)} {}

    static BiPoly constant(const Rational& c, Vars vars) {
        BiPoly r(std::move(vars));
        r.add_term(0, 0, c);
        return r;
    }

    static BiPoly monomial(const Rational& c, long e1, long e2, Vars vars) {
        if (e1 < 0 || e2 < 0) throw std::domain_error("BiPoly: negative exponent");
        BiPoly r(std::move(vars));
        r.add_term(e1, e2, c);
        return r;
    }

    /// The indeterminate in the given slot (0 or 1) as a polynomial.
    static BiPoly var(int slot, Vars vars) {
        check_slot(slot);
        return monomial(Rational(1), slot == 0 ? 1 : 0, slot == 0 ? 0 : 1, std::move(vars));
    }

    /// Injects a univariate polynomial, reading its coefficients into powers
    /// of the indeterminate in `slot`. The univariate name is discarded.
    static BiPoly from_poly(const Poly& p, int slot, Vars vars) {
        check_slot(slot);
        BiPoly r(std::move(vars));
        for (long i = 0; i <= p.degree(); ++i) {
            if (slot == 0)
                r.add_term(i, 0, p.coeff(i));
            else
                r.add_term(0, i, p.coeff(i));
        }
        return r;
    }

    const Vars& indeterminates() const { return vars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exp, Rational>& terms() const { return terms_; }

    Rational coeff(long e1, long e2) const {
        auto it = terms_.find({e1, e2});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    long degree(int slot) const {
        check_slot(slot);
        long d = -1;
        for (const auto& [e, c] : terms_) {
            const long v = slot == 0 ? e.first : e.second;
            if (v > d) d = v;
        }
        return d;
    }

    BiPoly& operator+=(const BiPoly& o) {
        require_same_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
        return *this;
    }

    BiPoly& operator-=(const BiPoly& o) {
        require_same_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
        return *this;
    }

    friend BiPoly operator+(BiPoly a, const BiPoly& b) { a += b; return a; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { a -= b; return a; }

    BiPoly operator-() const {
        BiPoly r(vars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        a.require_same_vars(b);
        BiPoly r(a.vars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
        return r;
    }

    BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }

    friend BiPoly operator*(BiPoly p, const Rational& c) {
        if (c.is_zero()) return BiPoly(p.vars_);
        for (auto& [e, x] : p.terms_) x *= c;
        return p;
    }

    friend BiPoly operator*(const Rational& c, BiPoly p) { return std::move(p) * c; }

    BiPoly pow(unsigned long e) const {
        BiPoly r = constant(Rational(1), vars_);
        for (unsigned long i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    /// Formal partial derivative w.r.t. the indeterminate in `slot`, applied
    /// `order` times.
    BiPoly derivative(int slot, unsigned long order = 1) const {
        check_slot(slot);
        BiPoly r(vars_);
        const long ord = static_cast<long>(order);
        for (const auto& [e, c] : terms_) {
            const long deg = slot == 0 ? e.first : e.second;
            if (deg < ord) continue;
            Rational f = c;
            for (long i = 0; i < ord; ++i) f *= Rational(deg - i);
            if (slot == 0)
                r.add_term(e.first - ord, e.second, f);
            else
                r.add_term(e.first, e.second - ord, f);
        }
        return r;
    }

    /// Replaces the indeterminate in `slot` by an arbitrary polynomial value
    /// over the same pair (covers t -> t+1, t -> -t, z -> 1-x-y, ...).
    BiPoly substitute(int slot, const BiPoly& value) const {
        check_slot(slot);
        value.require_same_vars(*this);
        std::vector<BiPoly> powers{constant(Rational(1), vars_)};
        BiPoly r(vars_);
        for (const auto& [e, c] : terms_) {
            const long ev = slot == 0 ? e.first : e.second;
            const long eo = slot == 0 ? e.second : e.first;
            while (static_cast<long>(powers.size()) <= ev)
                powers.push_back(powers.back() * value);
            BiPoly other = slot == 0 ? monomial(c, 0, eo, vars_) : monomial(c, eo, 0, vars_);
            r += powers[static_cast<size_t>(ev)] * other;
        }
        return r;
    }

    BiPoly substitute_value(int slot, const Rational& a) const {
        check_slot(slot);
        BiPoly r(vars_);
        for (const auto& [e, c] : terms_) {
            const long ev = slot == 0 ? e.first : e.second;
            const long eo = slot == 0 ? e.second : e.first;
            const Rational f = c * bpv::pow(a, static_cast<unsigned long>(ev));
            if (slot == 0)
                r.add_term(0, eo, f);
            else
                r.add_term(eo, 0, f);
        }
        return r;
    }

    /// Collapses to a univariate polynomial in the indeterminate of `slot`;
    /// every term must be free of the other indeterminate.
    Poly to_poly(int slot) const {
        check_slot(slot);
        std::vector<Rational> coeffs;
        for (const auto& [e, c] : terms_) {
            const long keep = slot == 0 ? e.first : e.second;
            const long other = slot == 0 ? e.second : e.first;
            if (other != 0)
                throw std::domain_error("BiPoly: not univariate in " + vars_[static_cast<size_t>(slot)]);
            if (static_cast<long>(coeffs.size()) <= keep) coeffs.resize(static_cast<size_t>(keep) + 1, Rational(0));
            coeffs[static_cast<size_t>(keep)] = c;
        }
        return Poly(std::move(coeffs), vars_[static_cast<size_t>(slot)]);
    }

    friend bool operator==(const BiPoly& a, const BiPoly& b) {
        if (a.terms_ != b.terms_) return false;
        return a.terms_.empty() || a.is_constant() || a.vars_ == b.vars_;
    }

    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exp{0, 0});
    }

    /// Canonical rendering: terms in descending lexicographic exponent order,
    /// e.g. "t^2*x - 2*t + 1/2".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            const bool neg = c.sign() < 0;
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            const Rational a = neg ? -c : c;
            std::string varpart;
            if (e.first > 0) {
                varpart += vars_[0];
                if (e.first > 1) varpart += "^" + std::to_string(e.first);
            }
            if (e.second > 0) {
                if (!varpart.empty()) varpart += "*";
                varpart += vars_[1];
                if (e.second > 1) varpart += "^" + std::to_string(e.second);
            }
            if (varpart.empty()) {
                out += a.to_string();
            } else {
                if (!a.is_one()) out += a.to_string() + "*";
                out += varpart;
            }
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const BiPoly& p) { return os << p.to_string(); }

private:
    static void check_slot(int slot) {
        if (slot != 0 && slot != 1) throw std::invalid_argument("BiPoly: slot must be 0 or 1");
    }

    void require_same_vars(const BiPoly& o) const {
        if (vars_ != o.vars_ && !is_constant() && !o.is_constant())
            throw std::invalid_argument("BiPoly: indeterminate mismatch (" + vars_[0] + "," + vars_[1] +
                                        " vs " + o.vars_[0] + "," + o.vars_[1] + ")");
    }

    void add_term(long e1, long e2, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace({e1, e2}, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::map<Exp, Rational> terms_;
    Vars vars_;
};

/// p(arg) for univariate p and bivariate argument, expanded exactly.
inline BiPoly compose_poly(const Poly& p, const BiPoly& arg) {
    BiPoly r(arg.indeterminates());
    for (long i = p.degree(); i >= 0; --i) {
        r = r * arg + BiPoly::constant(p.coeff(i), arg.indeterminates());
    }
    return r;
}

}  // namespace bpv
