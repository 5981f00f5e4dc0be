#include <catch2/catch_amalgamated.hpp>

#include <thread>
#include <vector>

#include "bpv/bernoulli.hpp"
#include "bpv/bipoly.hpp"

using namespace bpv;

TEST_CASE("bernoulli numbers match hand-run recurrence values") {
    CHECK(bernoulli_number(0) == Rational(1));
    // n = 1 row of the recurrence: B_1 = -(1/2) C(2,0) B_0
    CHECK(bernoulli_number(1) == Rational(-1, 2));
    CHECK(bernoulli_number(2) == Rational(1, 6));
    CHECK(bernoulli_number(3) == Rational(0));
    CHECK(bernoulli_number(4) == Rational(-1, 30));
    CHECK(bernoulli_number(6) == Rational(1, 42));
    CHECK(bernoulli_number(8) == Rational(-1, 30));
    CHECK(bernoulli_number(10) == Rational(5, 66));
    CHECK(bernoulli_number(12) == Rational(-691, 2730));
    CHECK_THROWS_AS(bernoulli_number(-1), std::domain_error);
}

TEST_CASE("odd bernoulli numbers above 1 vanish") {
    for (long n = 3; n <= 31; n += 2) CHECK(bernoulli_number(n) == Rational(0));
}

TEST_CASE("bernoulli polynomials from the defining sum") {
    CHECK(bernoulli_polynomial(0) == Poly(Rational(1)));
    CHECK(bernoulli_polynomial(1) == Poly({Rational(-1, 2), Rational(1)}, "x"));
    CHECK(bernoulli_polynomial(2) == Poly({Rational(1, 6), Rational(-1), Rational(1)}, "x"));
    CHECK(bernoulli_polynomial(3) ==
          Poly({Rational(0), Rational(1, 2), Rational(-3, 2), Rational(1)}, "x"));
}

TEST_CASE("degree, leading coefficient, and value at zero") {
    for (long n = 0; n <= 30; ++n) {
        const Poly p = bernoulli_polynomial(n);
        CHECK(p.degree() == n);
        CHECK(p.leading_coeff() == Rational(1));
        CHECK(p.eval(Rational(0)) == bernoulli_number(n));
    }
}

TEST_CASE("pointwise evaluation") {
    CHECK(bernoulli_at(2, Rational(0)) == Rational(1, 6));
    CHECK(bernoulli_at(1, Rational(1)) == Rational(1, 2));
    for (long n = 0; n <= 12; ++n) CHECK(bernoulli_at(n, Rational(0)) == bernoulli_number(n));
}

TEST_CASE("reflection B_n(1-x) = (-1)^n B_n(x)") {
    const Poly one_minus_x = Poly({Rational(1), Rational(-1)}, "x");
    for (long n = 0; n <= 30; ++n) {
        const Poly lhs = bernoulli_polynomial(n).compose(one_minus_x);
        const Poly rhs = (n % 2 == 0 ? Rational(1) : Rational(-1)) * bernoulli_polynomial(n);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("endpoint B_n(1) = (-1)^n B_n(0)") {
    for (long n = 0; n <= 30; ++n) {
        const Rational sgn = n % 2 == 0 ? Rational(1) : Rational(-1);
        CHECK(bernoulli_at(n, Rational(1)) == sgn * bernoulli_at(n, Rational(0)));
    }
}

TEST_CASE("forward difference B_n(x+1) - B_n(x) = n x^{n-1}") {
    for (long n = 1; n <= 30; ++n) {
        const Poly diff = bernoulli_polynomial(n).shift(Rational(1)) - bernoulli_polynomial(n);
        CHECK(diff == Poly::monomial(n - 1, Rational(n), "x"));
    }
}

TEST_CASE("telescoped difference B_n(x+r) - B_n(x) = sum_i n (x+i)^{n-1}") {
    for (long n = 1; n <= 15; ++n)
        for (long r = 1; r <= 5; ++r) {
            const Poly lhs = bernoulli_polynomial(n).shift(Rational(r)) - bernoulli_polynomial(n);
            Poly rhs("x");
            for (long i = 0; i < r; ++i)
                rhs += Rational(n) * Poly::monomial(n - 1, Rational(1), "x").shift(Rational(i));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("translation B_n(x+y) = sum_j C(n,j) B_j(x) y^{n-j}") {
    const BiPoly::Vars xy{"x", "y"};
    const BiPoly x_plus_y = BiPoly::var(0, xy) + BiPoly::var(1, xy);
    for (long n = 0; n <= 20; ++n) {
        const BiPoly lhs = compose_poly(bernoulli_polynomial(n), x_plus_y);
        BiPoly rhs(xy);
        for (long j = 0; j <= n; ++j)
            rhs += Rational(binomial(n, j)) * (BiPoly::from_poly(bernoulli_polynomial(j), 0, xy) *
                                               BiPoly::monomial(Rational(1), 0, n - j, xy));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("reflected and shifted forms agree with composition") {
    for (long n = 0; n <= 20; ++n) {
        CHECK(bernoulli_polynomial_reflected(n) ==
              bernoulli_polynomial(n).compose(-Poly::variable("x")));
        CHECK(bernoulli_polynomial_shifted(n) == bernoulli_polynomial(n).shift(Rational(1)));
    }
}

TEST_CASE("cache tolerates concurrent readers") {
    BernoulliCache cache;
    std::vector<std::thread> workers;
    std::vector<Rational> results(8);
    for (int i = 0; i < 8; ++i)
        workers.emplace_back([&cache, &results, i] { results[static_cast<size_t>(i)] = cache.number(40); });
    for (auto& w : workers) w.join();
    for (const auto& r : results) CHECK(r == bernoulli_number(40));
}
