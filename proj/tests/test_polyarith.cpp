#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "confcohom/bipoly.hpp"
#include "confcohom/laurent.hpp"
#include "support.hpp"

#include <stdexcept>

using namespace confcohom;
using testing::T;

TEST_CASE("canonical form drops zero coefficients") {
    LaurentPoly p = T(2) + T(1) - T(2);
    CHECK(p == T(1));
    CHECK(p.terms().size() == 1);
    CHECK((T(3) - T(3)).is_zero());
    CHECK(LaurentPoly(0).is_zero());
    CHECK(LaurentPoly{{2, 0}, {1, 5}} == LaurentPoly::monomial(5, 1));
}

TEST_CASE("lp_ring examples") {
    CHECK(lp_ring(T(2), T(1), RingOp::mul) == T(3));
    CHECK(lp_ring(T(2) + T(1), T(2) - T(1), RingOp::add) == 2 * T(2));
    CHECK(lp_ring(T(2) + T(1), T(2) + 2 * T(1), RingOp::mul) == LaurentPoly{{4, 1}, {3, 3}, {2, 2}});
    CHECK(lp_ring(T(2), T(-2), RingOp::mul) == LaurentPoly(1));
    CHECK(lp_ring(T(2), T(2), RingOp::sub).is_zero());
}

TEST_CASE("lp_substitute examples") {
    CHECK(lp_substitute(T(2) + T(1), 2, false) == T(4) + T(2));
    CHECK(lp_substitute(T(2) + T(1), 1, true) == T(2) - T(1));
    CHECK(lp_substitute(T(3), 3, true) == -T(9));
    CHECK(lp_substitute(T(-1), 2, true) == -T(-2));
    CHECK_THROWS_AS(lp_substitute(T(1), 0, false), std::invalid_argument);
}

TEST_CASE("lp_falling_product examples") {
    CHECK(lp_falling_product(T(2), -T(1), 3) == LaurentPoly{{6, 1}, {5, 3}, {4, 2}});
    CHECK(lp_falling_product(3, 1, 3) == LaurentPoly(6));
    CHECK(lp_falling_product(T(5) + 7, T(1), 0) == LaurentPoly(1));
    CHECK(lp_falling_product(2, 1, 3).is_zero());
}

TEST_CASE("lp_dual examples") {
    CHECK(lp_dual(LaurentPoly{{6, 1}, {5, 3}, {4, 2}}, 6) == LaurentPoly{{0, 1}, {1, 3}, {2, 2}});
    CHECK(lp_dual(1, 0) == LaurentPoly(1));
    for (int k = -3; k <= 5; ++k) CHECK(lp_dual(T(k), 2 * k) == T(k));
}

TEST_CASE("lp_negate_var examples") {
    CHECK(lp_negate_var(T(2) + T(1)) == T(2) - T(1));
    CHECK(lp_negate_var(LaurentPoly{{6, 1}, {5, 3}, {4, 2}}) == LaurentPoly{{6, 1}, {5, -3}, {4, 2}});
    CHECK(lp_negate_var(T(-3)) == -T(-3));
}

TEST_CASE("bp_eval_P examples") {
    BiPoly P = BiPoly::P(), BT = BiPoly::T();
    CHECK(bp_eval_P(P * P, T(2)) == T(4));
    CHECK(bp_eval_P(P * P * Integer(31) + P * BT * Integer(30), T(2)) == 31 * T(4) + 30 * T(3));
    LaurentPoly p = T(3) + 2 * T(1) + 5;
    BiPoly q = 1;
    for (unsigned m = 0; m <= 6; ++m) {
        CHECK(bp_eval_P(q, p) == p.pow(m));
        q = q * P;
    }
}

TEST_CASE("coefficients are arbitrary precision") {
    LaurentPoly f = lp_falling_product(40 * T(1), T(1), 25);  // 40^{25 falling} T^25
    Integer expect = 1;
    for (int i = 0; i < 25; ++i) expect *= 40 - i;
    CHECK(f == LaurentPoly::monomial(expect, 25));
    CHECK(expect > Integer("18446744073709551616"));
    CHECK(LaurentPoly(T(1) + 1).pow(70).coeff(35) == Integer("112186277816662845432"));
}

TEST_CASE("eval, exponents, divisibility") {
    LaurentPoly p{{-1, 2}, {0, 1}, {3, -4}};
    CHECK(p.min_exponent() == -1);
    CHECK(p.max_exponent() == 3);
    CHECK(p.eval(1) == -1);
    CHECK(p.eval(-1) == 3);
    CHECK_FALSE(p.nonnegative());
    CHECK(p.coeff(7) == 0);
    LaurentPoly q = 6 * T(2) + 9 * T(0);
    LaurentPoly out;
    CHECK(q.divide_exact(3, &out));
    CHECK(out == 2 * T(2) + 3);
    LaurentPoly untouched = T(9);
    CHECK_FALSE(q.divide_exact(2, &untouched));
    CHECK(untouched == T(9));
    CHECK(q.divisible_by(3));
    CHECK_FALSE(q.divisible_by(2));
    CHECK(q.shift(-2) == 6 + 9 * T(-2));
}

TEST_CASE("to_string") {
    CHECK(LaurentPoly().to_string() == "0");
    CHECK((T(6) - T(4)).to_string() == "T^6 - T^4");
    CHECK((2 * T(1) - 3).to_string() == "2*T - 3");
    CHECK((-T(-2)).to_string() == "-T^-2");
    CHECK((BiPoly::P() * Integer(31) * BiPoly::P() + BiPoly::P() * BiPoly::T() * Integer(30)).to_string() ==
          "31*P^2 + 30*P*T");
}

TEST_CASE("BiPoly homogeneity and coefficients") {
    BiPoly q = BiPoly::monomial(65, 4, 0) + BiPoly::monomial(300, 3, 1);
    CHECK(q.is_homogeneous(4));
    CHECK_FALSE(q.is_homogeneous(3));
    CHECK(q.coeff(3, 1) == 300);
    CHECK(q.coeff(0, 4) == 0);
    CHECK((q - q) == BiPoly());
    CHECK(BiPoly().is_homogeneous(2));
}

TEST_CASE("ring axioms on random inputs") {
    for (int trial = 0; trial < 200; ++trial) {
        LaurentPoly a = testing::random_poly(-4, 6, 9, 5);
        LaurentPoly b = testing::random_poly(-4, 6, 9, 5);
        LaurentPoly c = testing::random_poly(-4, 6, 9, 5);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == LaurentPoly());
        CHECK(a * LaurentPoly(1) == a);
        CHECK(lp_negate_var(lp_negate_var(a)) == a);
        int d = testing::uniform(-5, 12);
        CHECK(lp_dual(lp_dual(a, d), d) == a);
        int e1 = testing::uniform(1, 4), e2 = testing::uniform(1, 4);
        CHECK(lp_substitute(lp_substitute(a, e2, false), e1, false) == lp_substitute(a, e1 * e2, false));
        CHECK(lp_negate_var(a * b) == lp_negate_var(a) * lp_negate_var(b));
        CHECK(a.eval(-1) * b.eval(-1) == (a * b).eval(-1));
    }
}

TEST_CASE("falling product recurrence on random inputs") {
    for (int trial = 0; trial < 50; ++trial) {
        LaurentPoly f = testing::random_poly(0, 4, 5, 3);
        LaurentPoly g = testing::random_poly(0, 2, 3, 2);
        for (unsigned n = 0; n < 6; ++n)
            CHECK(lp_falling_product(f, g, n + 1) == lp_falling_product(f, g, n) * (f - g * Integer(n)));
    }
}
