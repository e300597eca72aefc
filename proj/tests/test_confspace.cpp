#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "confcohom/combinat.hpp"
#include "confcohom/confspace.hpp"
#include "confcohom/errors.hpp"
#include "confcohom/io.hpp"
#include "support.hpp"

using namespace confcohom;
using testing::T;

namespace {

SpaceSpec space(const LaurentPoly& pc, int dim, bool i_acyclic = true) {
    return SpaceSpec{"test", pc, dim, i_acyclic, true, true};
}

const SpaceSpec& C() { return builtin_fixture("c"); }

}  // namespace

TEST_CASE("space validation") {
    CHECK_NOTHROW(space(T(2), 2).validate());
    CHECK_THROWS_AS(space(T(2) - T(1), 2).validate(), ParseError);
    CHECK_THROWS_AS(space(T(3), 2).validate(), ParseError);
    CHECK_THROWS_AS(space(T(2) + 1, 2).validate(), ParseError);
    CHECK_NOTHROW(space(T(2) + 1, 2, false).validate());
    CHECK_THROWS_AS(space(T(-1), 2, false).validate(), ParseError);
    for (const auto& x : builtin_fixtures()) CHECK_NOTHROW(x.validate());
}

TEST_CASE("euler_char_Fm examples") {
    CHECK(euler_char_Fm(C(), 3) == 0);
    CHECK(euler_char_Fm(C(), 1) == 1);
    CHECK(euler_char_Fm(space(3 * T(2), 2), 2) == 6);
    CHECK(euler_char_Fm(C(), 0) == 1);
    CHECK(euler_char_Fm(builtin_fixture("klein_punctured"), 2) == 2);  // no hypothesis needed
}

TEST_CASE("euler characteristic generating series is (1+t)^chi") {
    for (int chi = -4; chi <= 5; ++chi) {
        SpaceSpec x = chi >= 0 ? space(chi * T(2), 2) : space(-chi * T(1), 1);
        REQUIRE(x.euler_c() == chi);
        for (int m = 0; m <= 10; ++m) {
            // coefficient of t^m in (1+t)^chi
            Integer coeff = chi >= 0 ? binomial(static_cast<unsigned>(chi), static_cast<unsigned>(m))
                                     : Integer(m % 2 ? -1 : 1) * binomial(static_cast<unsigned>(-chi + m - 1), static_cast<unsigned>(m));
            CHECK(euler_char_Fm(x, m) == coeff * factorial(static_cast<unsigned>(m)));
        }
    }
}

TEST_CASE("poincare_Fm examples") {
    CHECK(poincare_Fm(C(), 3) == LaurentPoly{{6, 1}, {5, 3}, {4, 2}});
    CHECK(poincare_Fm(builtin_fixture("r1"), 3) == 6 * T(3));
    CHECK(poincare_Fm(C(), 0) == LaurentPoly(1));
    for (const auto& x : i_acyclic_fixtures()) CHECK(poincare_Fm(x, 1) == x.pc);
    CHECK_THROWS_AS(poincare_Fm(builtin_fixture("klein_punctured"), 2), HypothesisViolation);
}

TEST_CASE("poincare_Fm recurrence, positivity and euler characteristic") {
    for (const auto& x : i_acyclic_fixtures())
        for (int m = 0; m <= 9; ++m) {
            LaurentPoly p = poincare_Fm(x, m);
            CHECK(poincare_Fm(x, m + 1) == p * (x.pc + m * T(1)));
            CHECK(p.nonnegative());
            CHECK(p.eval(-1) == euler_char_Fm(x, m));
        }
}

TEST_CASE("poincare_Delta examples") {
    for (const auto& x : i_acyclic_fixtures())
        for (int m = 1; m <= 6; ++m) {
            CHECK(poincare_Delta(x, m, m, true) == x.pc.pow(static_cast<unsigned>(m)));
            CHECK(poincare_Delta(x, 1, m, true) == x.pc);
            CHECK(poincare_Delta(x, m, m, false) == poincare_Fm(x, m));
        }
    CHECK(poincare_Delta(C(), 2, 3, false) == 3 * (T(4) + T(3)));
    CHECK(poincare_Delta(C(), 0, 0, false) == LaurentPoly(1));
    CHECK(poincare_Delta(C(), 0, 3, true).is_zero());
}

TEST_CASE("universal_poly examples and the full m=6 table") {
    auto P = [](int p, int t, long c) { return BiPoly::monomial(c, p, t); };
    CHECK(universal_poly(1, 6, true) == P(1, 0, 1));
    CHECK(universal_poly(2, 6, true) == P(2, 0, 31) + P(1, 1, 30));
    CHECK(universal_poly(3, 6, true) == P(3, 0, 90) + P(2, 1, 239) + P(1, 2, 150));
    CHECK(universal_poly(4, 6, true) == P(4, 0, 65) + P(3, 1, 300) + P(2, 2, 476) + P(1, 3, 240));
    CHECK(universal_poly(5, 6, true) == P(5, 0, 15) + P(4, 1, 85) + P(3, 2, 225) + P(2, 3, 274) + P(1, 4, 120));
    CHECK(universal_poly(6, 6, true) == P(6, 0, 1));
    for (int m = 1; m <= 8; ++m) CHECK(universal_poly(1, m, true) == BiPoly::P());
}

TEST_CASE("universal polynomial evaluates to poincare_Delta") {
    for (const auto& x : i_acyclic_fixtures())
        for (int m = 1; m <= 8; ++m)
            for (int l = 1; l <= m; ++l)
                for (bool closed : {false, true}) {
                    LaurentPoly p = poincare_Delta(x, l, m, closed);
                    CHECK(bp_eval_P(universal_poly(l, m, closed), x.pc) == p);
                    CHECK(universal_poly(l, m, closed).is_homogeneous(l));
                    CHECK(p.nonnegative());
                }
}

TEST_CASE("euler characteristic additivity over the diagonal stratification") {
    for (const auto& x : i_acyclic_fixtures())
        for (int m = 1; m <= 7; ++m) {
            Integer open_sum = 0;
            for (int l = 1; l <= m; ++l) {
                Integer e = poincare_Delta(x, l, m, false).eval(-1);
                CHECK(e == stirling(StirlingKind::second, m, l) * euler_char_Fm(x, l));
                open_sum += e;
                Integer closed = poincare_Delta(x, l, m, true).eval(-1);
                Integer partial = 0;
                for (int k = 1; k <= l; ++k) partial += poincare_Delta(x, k, m, false).eval(-1);
                CHECK(closed == partial);
            }
            Integer chi_m = 1;
            for (int k = 0; k < m; ++k) chi_m *= x.euler_c();
            CHECK(open_sum == chi_m);
        }
}

TEST_CASE("poincare_ordinary examples") {
    CHECK(poincare_ordinary(C(), 3) == LaurentPoly{{0, 1}, {1, 3}, {2, 2}});
    CHECK(poincare_ordinary(C(), 3) == (1 + T(1)) * (1 + 2 * T(1)));
    for (const auto& x : i_acyclic_fixtures()) CHECK(poincare_ordinary(x, 1) == lp_dual(x.pc, x.dim));
    CHECK(poincare_ordinary(builtin_fixture("r3"), 2) == 1 + T(2));
    CHECK_THROWS_AS(poincare_ordinary(builtin_fixture("klein_punctured"), 2), HypothesisViolation);
}

TEST_CASE("betti_bm examples") {
    CHECK(betti_bm(C(), 3, 1) == 3);
    for (const auto& x : i_acyclic_fixtures())
        for (int m = 1; m <= 5; ++m) {
            if (x.dim >= 2) CHECK(betti_bm(x, m, 0) == 1);
            CHECK(betti_bm(x, m, m * x.dim + 1) == 0);
        }
    for (int m = 2; m <= 10; ++m) CHECK(betti_bm(C(), m, 1) == binomial(static_cast<unsigned>(m), 2));
}

TEST_CASE("hypothesis violations name the flag") {
    SpaceSpec x = builtin_fixture("klein_punctured");
    try {
        poincare_Delta(x, 1, 2, true);
        FAIL("expected a refusal");
    } catch (const HypothesisViolation& e) {
        CHECK(e.flag() == "i_acyclic");
        CHECK(e.kind() == ErrorKind::hypothesis_violation);
    }
}
