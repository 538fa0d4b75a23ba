#include "diskpoly/jacobi.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

using namespace diskpoly;

namespace {

const Mode R = Mode::rational;

Scalar rat(long long num, long long den = 1) { return Scalar(Rational(num, den)); }

const std::vector<Rational> kParamGrid = {
    Rational(-1, 2), Rational(0), Rational(1, 2), Rational(1), Rational(2), Rational(7, 3)};

}  // namespace

TEST_CASE("explicit formula reproduces the classical low degrees") {
    CHECK(jacobi_explicit(rat(0), rat(0), 0) == UniPoly::constant(Scalar::one(R)));
    CHECK(jacobi_explicit(rat(0), rat(0), 1) == UniPoly::variable(R));
    // P_2^{(0,0)} = (3 t^2 - 1) / 2
    UniPoly p2 = jacobi_explicit(rat(0), rat(0), 2);
    CHECK(p2.coeff(2) == rat(3, 2));
    CHECK(p2.coeff(1).is_zero());
    CHECK(p2.coeff(0) == rat(-1, 2));
}

TEST_CASE("value at t = 1 is (alpha+1)_n / n!") {
    for (const Rational& a : kParamGrid) {
        for (int n = 0; n <= 8; ++n) {
            const UniPoly p = jacobi_explicit(Scalar(a), rat(3, 4), n);
            CHECK(p.eval(Scalar::one(R)).rat() == pochhammer(a + Rational(1), n) / factorial(n));
        }
    }
}

TEST_CASE("leading coefficient equals (n+alpha+beta+1)_n / (2^n n!)") {
    for (const Rational& a : kParamGrid) {
        for (const Rational& b : kParamGrid) {
            for (int n = 0; n <= 10; ++n) {
                const UniPoly p = jacobi_explicit(Scalar(a), Scalar(b), n);
                REQUIRE(p.degree() == n);
                const Rational expected =
                    pochhammer(a + b + Rational(n + 1), n) / (Rational::pow(Rational(2), n) * factorial(n));
                CHECK(p.leading_coeff().rat() == expected);
            }
        }
    }
}

TEST_CASE("differential operator eigen-relation holds exactly on the grid") {
    for (const Rational& a : kParamGrid) {
        for (const Rational& b : kParamGrid) {
            for (int n = 0; n <= 12; ++n) {
                const UniPoly p = jacobi_explicit(Scalar(a), Scalar(b), n);
                const UniPoly lhs = apply_jacobi_operator(Scalar(a), Scalar(b), p);
                const Scalar eigen = Scalar(-(a + b + Rational(n + 1)) * Rational(n));
                CHECK(lhs == p.scaled(eigen));
            }
        }
    }
}

TEST_CASE("operator annihilates constants and matches hand results") {
    CHECK(apply_jacobi_operator(rat(3, 2), rat(-1, 3), UniPoly::constant(rat(5))).is_zero());
    // L^{0,0} t = -2t
    CHECK(apply_jacobi_operator(rat(0), rat(0), UniPoly::variable(R)) ==
          UniPoly::variable(R).scaled(rat(-2)));
    // L^{0,0} P_2 = -6 P_2
    const UniPoly p2 = jacobi_explicit(rat(0), rat(0), 2);
    CHECK(apply_jacobi_operator(rat(0), rat(0), p2) == p2.scaled(rat(-6)));
}

TEST_CASE("recurrence evaluation matches the explicit formula") {
    CHECK(jacobi_eval_recurrence(0, 0, 1, 0.5) == doctest::Approx(0.5));
    CHECK(jacobi_eval_recurrence(0, 0, 2, 0.0) == doctest::Approx(-0.5));
    for (int n : {0, 1, 2, 5, 17, 50}) {
        CHECK(jacobi_eval_recurrence(0, 0, n, 1.0) == doctest::Approx(1.0));
    }

    // The monomial-basis expansion cancels catastrophically in float for large n,
    // so the reference side evaluates the exact polynomial at rational points.
    std::mt19937 rng(31337);
    std::uniform_int_distribution<long long> param_num(-28, 96);  // /32 in (-0.9, 3]
    std::uniform_int_distribution<long long> point_num(-64, 64);
    std::uniform_int_distribution<int> deg(0, 30);
    for (int trial = 0; trial < 100; ++trial) {
        const Rational a(param_num(rng), 32);
        const Rational b(param_num(rng), 32);
        const Rational t(point_num(rng), 64);
        const int n = deg(rng);
        const double via_poly = jacobi_explicit(Scalar(a), Scalar(b), n).eval(Scalar(t)).to_double();
        const double via_rec = jacobi_eval_recurrence(a.to_double(), b.to_double(), n, t.to_double());
        const double scale = std::max({1.0, std::abs(via_poly), std::abs(via_rec)});
        CHECK(std::abs(via_poly - via_rec) <= 1e-12 * scale);
    }
    // Still within tolerance at the top of the stated range.
    for (int n : {40, 50}) {
        const Rational a(5, 4), b(-1, 3), t(7, 16);
        const double via_poly = jacobi_explicit(Scalar(a), Scalar(b), n).eval(Scalar(t)).to_double();
        const double via_rec = jacobi_eval_recurrence(a.to_double(), b.to_double(), n, t.to_double());
        const double scale = std::max({1.0, std::abs(via_poly), std::abs(via_rec)});
        CHECK(std::abs(via_poly - via_rec) <= 1e-12 * scale);
    }
}

TEST_CASE("explicit formula works below the orthogonality range") {
    // Formal objects with parameters <= -1 still come out of the sum.
    const UniPoly p = jacobi_explicit(rat(-2), rat(1), 3);
    CHECK(p.degree() == 3);
    JacobiParams params{rat(-2), rat(1), 3};
    CHECK(!params.alpha_orthogonal());
    CHECK(params.beta_orthogonal());
    CHECK(jacobi_explicit(params) == p);
}

TEST_CASE("weight function") {
    CHECK(jacobi_weight(0, 0, 0.3) == doctest::Approx(1.0));
    CHECK(jacobi_weight(1, 0, 0.0) == doctest::Approx(1.0));
    CHECK(jacobi_weight(1, 1, 0.5) == doctest::Approx(0.75));
    CHECK_THROWS_AS(jacobi_weight(-0.5, 0, 1.0), std::domain_error);
    CHECK_NOTHROW(jacobi_weight(1, 2, 1.0));
}

TEST_CASE("reflection identity") {
    CHECK(reflection_check(rat(0), rat(0), 3));
    CHECK(reflection_check(rat(1, 2), rat(2), 4));
    CHECK(reflection_check(rat(1), rat(3), 0));
    for (const Rational& a : kParamGrid) {
        for (const Rational& b : kParamGrid) {
            for (int n = 0; n <= 9; ++n) {
                CHECK(reflection_check(Scalar(a), Scalar(b), n));
            }
        }
    }
}
