#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "bpv/padic.hpp"
#include "bpv/poly.hpp"
#include "bpv/sweep.hpp"
#include "bpv/volkenborn.hpp"

using namespace bpv;

namespace {

// Independent oracle: evaluate the partial sum by literally enumerating
// f(0), ..., f(p^N - 1). Only usable when p^N is small, which is the point.
Rational partial_sum_by_enumeration(const Poly& f, long p, long N) {
    long count = 1;
    for (long i = 0; i < N; ++i) count *= p;
    Rational acc(0);
    for (long j = 0; j < count; ++j) acc += f.eval(Rational(j));
    return acc / Rational(count);
}

Poly random_poly_t(std::mt19937_64& rng, long max_deg) {
    std::uniform_int_distribution<long> deg(0, max_deg);
    std::uniform_int_distribution<long> num(-30, 30);
    std::uniform_int_distribution<long> den(1, 30);
    std::vector<Rational> c(static_cast<size_t>(deg(rng)) + 1, Rational(0));
    for (auto& x : c) x = Rational(num(rng), den(rng));
    return Poly(std::move(c), "t");
}

const Poly t = Poly::variable("t");

}  // namespace

TEST_CASE("rational to padic images") {
    const PadicNumber a = rational_to_padic(Rational(1, 6), 5, 4);
    CHECK_FALSE(a.zero);
    CHECK(a.valuation == 0);
    CHECK(a.unit == BigInt(521));
    // modular-inverse oracle: 6 * 521 = 3126 = 5 * 625 + 1
    CHECK((BigInt(6) * a.unit - BigInt(1)) == BigInt(5) * BigInt(625));

    CHECK(rational_to_padic(Rational(0), 7, 4).zero);

    const PadicNumber c = rational_to_padic(Rational(1, 2), 2, 4);
    CHECK(c.valuation == -1);
    CHECK(c.unit == BigInt(1));

    CHECK_THROWS_AS(rational_to_padic(Rational(1), 4, 4), std::domain_error);
    CHECK_THROWS_AS(rational_to_padic(Rational(1), 5, 0), std::domain_error);
}

TEST_CASE("padic equality compares units at shared precision") {
    const PadicNumber a = rational_to_padic(Rational(1, 3), 5, 4);
    const PadicNumber b = rational_to_padic(Rational(1, 3) + Rational(625), 5, 4);
    CHECK(a == b);  // differ only at p^4
    const PadicNumber c = rational_to_padic(Rational(1, 3) + Rational(125), 5, 4);
    CHECK(a != c);  // differ at p^3 < precision
    const PadicNumber d = rational_to_padic(Rational(1, 3) + Rational(125), 5, 3);
    CHECK(a == d);  // at shared precision 3 they agree
    CHECK(rational_to_padic(Rational(5), 5, 4) != rational_to_padic(Rational(1), 5, 4));
}

TEST_CASE("padic valuation") {
    CHECK(padic_valuation(Rational(50), 5) == 2);
    CHECK(padic_valuation(Rational(1, 50), 5) == -2);
    CHECK(padic_valuation(Rational(3, 7), 5) == 0);
    CHECK_THROWS_AS(padic_valuation(Rational(0), 5), std::domain_error);
}

TEST_CASE("partial sums, hand values") {
    CHECK(volkenborn_partial_sum(t, 2, 3) == Rational(7, 2));   // 28/8
    CHECK(volkenborn_partial_sum(Poly(Rational(1), "t"), 7, 5) == Rational(1));
    CHECK(volkenborn_partial_sum(t, 3, 2) == Rational(4));      // 36/9
}

TEST_CASE("partial sums match literal enumeration") {
    std::mt19937_64 rng(20240816);
    for (int i = 0; i < 20; ++i) {
        const Poly f = random_poly_t(rng, 6);
        for (const auto& [p, n] : {std::pair<long, long>{2, 5}, {3, 3}, {5, 2}, {7, 1}})
            CHECK(volkenborn_partial_sum(f, p, n) == partial_sum_by_enumeration(f, p, n));
    }
}

TEST_CASE("exact integrals via the Bernoulli route") {
    CHECK(volkenborn_exact(t) == Rational(-1, 2));
    CHECK(volkenborn_exact(t.pow(2)) == Rational(1, 6));
    CHECK(volkenborn_exact(t.pow(3)) == Rational(0));
    CHECK(volkenborn_exact(Poly("t")) == Rational(0));
}

TEST_CASE("exact integration is linear") {
    std::mt19937_64 rng(20240817);
    for (int i = 0; i < 30; ++i) {
        const Poly f = random_poly_t(rng, 10);
        const Poly g = random_poly_t(rng, 10);
        const Rational a(3, 5), b(-7, 2);
        CHECK(volkenborn_exact(a * f + b * g) ==
              a * volkenborn_exact(f) + b * volkenborn_exact(g));
    }
}

TEST_CASE("shifted integral returns Bernoulli polynomials") {
    CHECK(volkenborn_shifted(t.pow(2)) == bernoulli_polynomial(2));
    const Poly f = Rational(2) * t.pow(3) - t;
    CHECK(volkenborn_shifted(f) ==
          Rational(2) * bernoulli_polynomial(3) - bernoulli_polynomial(1));
}

TEST_CASE("numeric convergence reaches the exact value") {
    const VolkenbornSeries s1 = volkenborn_converge(t, 2, 4);
    REQUIRE(s1.stabilized);
    CHECK(s1.value == rational_to_padic(Rational(-1, 2), 2, 4));

    const VolkenbornSeries s2 = volkenborn_converge(t.pow(2), 5, 4);
    REQUIRE(s2.stabilized);
    CHECK(s2.value == rational_to_padic(Rational(1, 6), 5, 4));

    const VolkenbornSeries s3 = volkenborn_converge(Poly(Rational(9, 4), "t"), 3, 4);
    REQUIRE(s3.stabilized);
    CHECK(s3.value == rational_to_padic(Rational(9, 4), 3, 4));

    // limit zero: valuations of S_N escape upward instead of stabilizing
    const VolkenbornSeries s4 = volkenborn_converge(t.pow(3), 2, 4);
    REQUIRE(s4.stabilized);
    CHECK(s4.value == rational_to_padic(Rational(0), 2, 4));
}

TEST_CASE("2-adic convergence rate for f(t) = t is exactly N-1") {
    for (long n = 2; n <= 12; ++n) {
        const Rational err = volkenborn_partial_sum(t, 2, n) + Rational(1, 2);
        CHECK(padic_valuation(err, 2) == n - 1);
    }
}

TEST_CASE("functional equation of the reflected/shifted integral") {
    CHECK(check_lemma1(t.pow(2), 5).pass);
    CHECK(check_lemma1(t, 3).pass);       // odd: integral = -f'(0)/2
    CHECK(check_lemma1(t.pow(3), 2).pass); // odd with f'(0) = 0
    for (long n = 0; n <= 20; ++n) CHECK(check_lemma1(Poly::monomial(n, Rational(1), "t"), 5).pass);
    std::mt19937_64 rng(20240818);
    for (int i = 0; i < 20; ++i) CHECK(check_lemma1(random_poly_t(rng, 10), 7).pass);
}

TEST_CASE("indefinite-sum functional equation") {
    CHECK(check_functional_equation(t.pow(2), Rational(0), 1).pass);
    CHECK(check_functional_equation(Poly(Rational(4, 3), "t"), Rational(1, 2), 2).pass);
    CHECK(check_functional_equation(t.pow(3), Rational(2), 3).pass);
    std::mt19937_64 rng(20240819);
    for (int i = 0; i < 10; ++i)
        CHECK(check_functional_equation(random_poly_t(rng, 8), Rational(1, 3), 3).pass);
}

TEST_CASE("witt oracle spot checks") {
    CHECK(check_witt_oracle(1, 0, 2, 4).pass);
    CHECK(check_witt_oracle(3, 0, 2, 4).pass);  // B_3 = 0
    CHECK(check_witt_oracle(2, 1, 5, 4).pass);  // B_2(1) = 1/6
    CHECK(check_witt_oracle(5, 2, 7, 4).pass);
}

TEST_CASE("power sums satisfy their defining recurrence") {
    const std::vector<BigInt> s = power_sums(BigInt(100), 6);
    // spot values against closed forms
    CHECK(s[0] == BigInt(100));
    CHECK(s[1] == BigInt(99 * 100 / 2));
    CHECK(s[2] == BigInt(99L * 100 * 199 / 6));
    BigInt cubes(0);
    for (long j = 0; j < 100; ++j) cubes += pow(BigInt(j), 3);
    CHECK(s[3] == cubes);
}
