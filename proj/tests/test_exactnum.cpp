#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "bpv/bigint.hpp"
#include "bpv/binomial.hpp"
#include "bpv/rational.hpp"

using namespace bpv;

namespace {

// Independent oracle: the factorial quotient n! / (k! (n-k)!).
BigInt binomial_by_factorials(long n, long k) {
    if (k < 0 || k > n) return BigInt(0);
    return BigInt::div_exact(factorial(n), factorial(k) * factorial(n - k));
}

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-100, 100);
    std::uniform_int_distribution<long> den(1, 100);
    return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("binomial base cases") {
    CHECK(binomial(5, 2) == binomial_by_factorials(5, 2));
    CHECK(binomial(5, 2) == BigInt(10));
    CHECK(binomial(3, 5) == BigInt(0));
    CHECK(binomial(3, -1) == BigInt(0));
    CHECK(binomial(7, 0) == BigInt(1));
    CHECK(binomial(7, 7) == BigInt(1));
    CHECK(binomial(0, 0) == BigInt(1));
    CHECK_THROWS_AS(binomial(-1, 0), std::domain_error);
}

TEST_CASE("binomial matches the factorial quotient") {
    for (long n = 0; n <= 40; ++n)
        for (long k = 0; k <= n; ++k) CHECK(binomial(n, k) == binomial_by_factorials(n, k));
}

TEST_CASE("binomial symmetry and Pascal's rule up to n = 64") {
    for (long n = 1; n <= 64; ++n)
        for (long k = 0; k <= n; ++k) {
            CHECK(binomial(n, k) == binomial(n, n - k));
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
        }
}

TEST_CASE("absorption identity C(j+m,nu)(j+m-nu) = C(j+m-1,nu)(j+m), j+m <= 40") {
    for (long j = 0; j <= 40; ++j)
        for (long m = (j == 0 ? 1 : 0); j + m <= 40; ++m)
            for (long nu = 0; nu <= j + m; ++nu)
                CHECK(binomial(j + m, nu) * BigInt(j + m - nu) ==
                      binomial(j + m - 1, nu) * BigInt(j + m));
}

TEST_CASE("rational arithmetic hand values") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(-1, 2) * Rational(1, 3) == Rational(-1, 6));
    const Rational x(7, 9);
    CHECK(x + Rational(0) == x);
    CHECK(Rational(1, 2) / Rational(1, 3) == Rational(3, 2));
}

TEST_CASE("rationals stay reduced with positive denominator") {
    const Rational a(6, 8);
    CHECK(a.numerator() == BigInt(3));
    CHECK(a.denominator() == BigInt(4));
    const Rational b(3, -4);
    CHECK(b.numerator() == BigInt(-3));
    CHECK(b.denominator() == BigInt(4));
    const Rational c = Rational(1, 6) + Rational(1, 3);  // = 1/2
    CHECK(c.numerator() == BigInt(1));
    CHECK(c.denominator() == BigInt(2));
    CHECK(Rational("22/121") == Rational(2, 11));
}

TEST_CASE("zero denominators and division by zero are rejected") {
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational("abc"), std::invalid_argument);
}

TEST_CASE("rational field axioms on random triples") {
    std::mt19937_64 rng(20240811);
    for (int i = 0; i < 200; ++i) {
        const Rational a = random_rational(rng);
        const Rational b = random_rational(rng);
        const Rational c = random_rational(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == Rational(0));
        if (!a.is_zero()) CHECK(a / a == Rational(1));
    }
}

TEST_CASE("bigint arithmetic at sizes beyond machine words") {
    const BigInt two_pow_100 = pow(BigInt(2), 100);
    CHECK(two_pow_100.to_string() == "1267650600228229401496703205376");
    CHECK(two_pow_100 - two_pow_100 == BigInt(0));
    CHECK(BigInt::div_exact(two_pow_100, pow(BigInt(2), 50)) == pow(BigInt(2), 50));
    CHECK(gcd(BigInt(12 * 35), BigInt(12 * 22)) == BigInt(12));
    CHECK((-two_pow_100).sign() == -1);
    CHECK(BigInt("123456789012345678901234567890") ==
          BigInt("123456789012345678901234567889") + BigInt(1));
    CHECK_THROWS_AS(BigInt("12x"), std::invalid_argument);
}

TEST_CASE("rational string rendering") {
    CHECK(Rational(5, 1).to_string() == "5");
    CHECK(Rational(-7, 3).to_string() == "-7/3");
    CHECK(Rational(0).to_string() == "0");
}
