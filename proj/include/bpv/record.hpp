#pragma once

#include <string>
#include <utility>

#include "bpv/bipoly.hpp"
#include "bpv/poly.hpp"
#include "bpv/rational.hpp"

namespace bpv {

/// Outcome of checking one identity instance: the family tag, the parameter
/// tuple, both sides in canonical text form, and — when the sides differ —
/// a descriptor of the first differing coefficient.
struct VerificationRecord {
    std::string family;
    std::string params;
    bool pass = false;
    std::string lhs;
    std::string rhs;
    std::string mismatch;  // empty when pass
};

inline std::string first_mismatch(const Poly& a, const Poly& b) {
    const long top = a.degree() > b.degree() ? a.degree() : b.degree();
    for (long d = 0; d <= top; ++d) {
        if (a.coeff(d) != b.coeff(d)) {
            const std::string mono =
                d == 0 ? "1" : a.indeterminate() + (d > 1 ? "^" + std::to_string(d) : "");
            return "coefficient of " + mono + ": lhs " + a.coeff(d).to_string() + ", rhs " +
                   b.coeff(d).to_string();
        }
    }
    return a.indeterminate() == b.indeterminate() ? "" : "indeterminate mismatch";
}

inline std::string first_mismatch(const BiPoly& a, const BiPoly& b) {
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    const auto describe = [&](BiPoly::Exp e, const Rational& l, const Rational& r) {
        std::string mono;
        if (e.first > 0) mono += a.indeterminates()[0] + (e.first > 1 ? "^" + std::to_string(e.first) : "");
        if (e.second > 0) {
            if (!mono.empty()) mono += "*";
            mono += a.indeterminates()[1] + (e.second > 1 ? "^" + std::to_string(e.second) : "");
        }
        if (mono.empty()) mono = "1";
        return "coefficient of " + mono + ": lhs " + l.to_string() + ", rhs " + r.to_string();
    };
    while (ia != a.terms().end() || ib != b.terms().end()) {
        if (ib == b.terms().end() || (ia != a.terms().end() && ia->first < ib->first)) {
            return describe(ia->first, ia->second, Rational(0));
        }
        if (ia == a.terms().end() || ib->first < ia->first) {
            return describe(ib->first, Rational(0), ib->second);
        }
        if (ia->second != ib->second) return describe(ia->first, ia->second, ib->second);
        ++ia;
        ++ib;
    }
    return "";
}

inline std::string first_mismatch(const Rational& a, const Rational& b) {
    if (a == b) return "";
    return "value: lhs " + a.to_string() + ", rhs " + b.to_string();
}

namespace detail {
inline Poly corrupted(const Poly& p) { return p + Poly(Rational(1), p.indeterminate()); }
inline BiPoly corrupted(const BiPoly& p) {
    return p + BiPoly::constant(Rational(1), p.indeterminates());
}
inline Rational corrupted(const Rational& r) { return r + Rational(1); }
}  // namespace detail

template <typename Side>
VerificationRecord make_record(std::string family, std::string params, const Side& lhs,
                               const Side& rhs, bool corrupt_lhs = false) {
    VerificationRecord rec;
    rec.family = std::move(family);
    rec.params = std::move(params);
    const Side effective = corrupt_lhs ? detail::corrupted(lhs) : lhs;
    rec.lhs = effective.to_string();
    rec.rhs = rhs.to_string();
    rec.pass = effective == rhs;
    if (!rec.pass) rec.mismatch = first_mismatch(effective, rhs);
    return rec;
}

/// Accumulates several labelled side-by-side comparisons into one record —
/// used by the proof-step checks, which bundle a few related equalities.
/// Renders the first comparison when everything passes, and the first
/// failing one otherwise.
class CheckSet {
public:
    CheckSet(std::string family, std::string params, bool corrupt_first = false)
        : rec_{std::move(family), std::move(params), true, "", "", ""}, corrupt_(corrupt_first) {}

    template <typename Side>
    void add(const std::string& label, const Side& lhs, const Side& rhs) {
        const Side eff = corrupt_ ? detail::corrupted(lhs) : lhs;
        corrupt_ = false;
        const bool ok = eff == rhs;
        if (first_) {
            rec_.lhs = eff.to_string();
            rec_.rhs = rhs.to_string();
            first_ = false;
        }
        if (!ok && rec_.pass) {
            rec_.pass = false;
            rec_.lhs = eff.to_string();
            rec_.rhs = rhs.to_string();
            rec_.mismatch = label + ": " + first_mismatch(eff, rhs);
        }
    }

    VerificationRecord finish() { return rec_; }

private:
    VerificationRecord rec_;
    bool corrupt_;
    bool first_ = true;
};

}  // namespace bpv
