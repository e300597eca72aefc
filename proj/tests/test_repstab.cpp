#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "confcohom/charseries.hpp"
#include "confcohom/combinat.hpp"
#include "confcohom/errors.hpp"
#include "confcohom/io.hpp"
#include "confcohom/repstab.hpp"
#include "support.hpp"

#include <thread>
#include <vector>

using namespace confcohom;
using testing::T;

namespace {

const SpaceSpec& C() { return builtin_fixture("c"); }

std::vector<Partition> shapes(int m) {
    std::vector<Partition> out;
    for (const auto& t : partitions(m)) out.push_back(t.parts());
    return out;
}

Partition conjugate(const Partition& p) {
    Partition out;
    for (int col = 1; !p.empty() && col <= p.front(); ++col) {
        int len = 0;
        for (int r : p) len += r >= col ? 1 : 0;
        out.push_back(len);
    }
    return out;
}

// number of l-subsets of {1..m} fixed by a permutation of the given type
Integer fixed_subsets(const CycleType& t, int l) {
    std::vector<Integer> ways(static_cast<size_t>(l + 1), 0);
    ways[0] = 1;
    for (int d = 1; d <= t.size(); ++d)
        for (int k = 0; k < t.x(d); ++k)
            for (int s = l; s >= d; --s) ways[static_cast<size_t>(s)] += ways[static_cast<size_t>(s - d)];
    return ways[static_cast<size_t>(l)];
}

Integer chi(const Partition& lambda, const CycleType& mu) { return Integer(static_cast<long>(mn_character(lambda, mu))); }

}  // namespace

TEST_CASE("padded partitions") {
    PaddedPartition p{{2, 1}, 6};
    CHECK(p.padded() == Partition{3, 2, 1});
    CHECK(PaddedPartition::unpad({3, 2, 1}).core == Partition{2, 1});
    CHECK(PaddedPartition::unpad({3, 2, 1}).m == 6);
    CHECK_THROWS_AS((PaddedPartition{{3}, 5}.padded()), std::invalid_argument);
    CHECK(partition_to_string({2, 1}) == "(2,1)");
    CHECK(partition_to_string({}) == "()");
}

TEST_CASE("mn_character examples") {
    for (int m = 1; m <= 8; ++m)
        for (const auto& mu : partitions(m)) {
            CHECK(mn_character({m}, mu) == 1);
            CHECK(mn_character(Partition(static_cast<size_t>(m), 1), mu) == mu.sign());
        }
    CHECK(mn_character({2, 1}, CycleType::identity(3)) == 2);
    CHECK(mn_character({2, 1}, CycleType::full_cycle(3)) == -1);
    CHECK(mn_character({2, 1}, CycleType::parse("1^1,2^1", 3)) == 0);
    CHECK(mn_character({3, 1}, CycleType::parse("2^2", 4)) == -1);
    CHECK(mn_character({2, 2}, CycleType::parse("1^1,3^1", 4)) == -1);
}

TEST_CASE("character orthogonality of both kinds") {
    for (int m = 1; m <= 7; ++m) {
        auto lambdas = shapes(m);
        auto mus = partitions(m);
        Integer order = factorial(static_cast<unsigned>(m));
        for (const auto& a : lambdas)
            for (const auto& b : lambdas) {
                Integer s = 0;
                for (const auto& mu : mus) s += class_size(mu) * chi(a, mu) * chi(b, mu);
                CHECK(s == (a == b ? order : Integer(0)));
            }
        for (const auto& mu : mus)
            for (const auto& nu : mus) {
                Integer s = 0;
                for (const auto& a : lambdas) s += chi(a, mu) * chi(a, nu);
                CHECK(s == (mu == nu ? order / class_size(mu) : Integer(0)));
            }
    }
}

TEST_CASE("hook lengths, transposition and dimensions") {
    for (int m = 1; m <= 9; ++m) {
        Integer squares = 0;
        for (const auto& lam : shapes(m)) {
            Integer dim = irrep_dimension(lam);
            CHECK(dim == chi(lam, CycleType::identity(m)));
            squares += dim * dim;
            for (const auto& mu : partitions(m)) CHECK(mn_character(conjugate(lam), mu) == mu.sign() * mn_character(lam, mu));
        }
        CHECK(squares == factorial(static_cast<unsigned>(m)));
    }
}

TEST_CASE("mn_character is safe under concurrent use") {
    std::vector<long long> sums(6, 0);
    std::vector<std::thread> pool;
    for (int t = 0; t < 6; ++t)
        pool.emplace_back([t, &sums] {
            long long s = 0;
            for (const auto& lam : shapes(10))
                for (const auto& mu : partitions(10)) s += mn_character(lam, mu) * mn_character(lam, mu);
            sums[static_cast<size_t>(t)] = s;
        });
    for (auto& th : pool) th.join();
    // second orthogonality: sum over lambda and mu of chi^2 = sum_mu |centralizer(mu)|
    long long expect = 0;
    for (const auto& mu : partitions(10)) expect += Integer(factorial(10) / class_size(mu)).get_si();
    for (long long s : sums) CHECK(s == expect);
}

TEST_CASE("decompose examples") {
    ClassSeries f2 = series_Fm(C(), 2);
    CHECK(decompose(f2, 4) == std::map<Partition, Integer>{{{}, 1}});
    CHECK(decompose(f2, 3) == std::map<Partition, Integer>{{{}, 1}});
    CHECK(decompose(f2, 7).empty());
    ClassSeries bad(2);
    bad.set(CycleType::identity(2), T(1));
    CHECK_THROWS_AS(decompose(bad, 1), ConsistencyError);
}

TEST_CASE("decompose recovers irreducible characters") {
    for (int m = 1; m <= 6; ++m)
        for (const auto& lam : shapes(m)) {
            ClassSeries s = ClassSeries::from_function(m, [&](const CycleType& mu) {
                return LaurentPoly::monomial(chi(lam, mu), 2);
            });
            CHECK(decompose(s, 2) == std::map<Partition, Integer>{{PaddedPartition::unpad(lam).core, 1}});
        }
}

TEST_CASE("pieri rule on the permutation module of subsets") {
    for (int m = 1; m <= 6; ++m)
        for (int l = 0; l <= m; ++l) {
            ClassSeries s = ClassSeries::from_function(m, [&](const CycleType& mu) { return LaurentPoly(fixed_subsets(mu, l)); });
            std::map<Partition, Integer> expect;
            for (int k = 0; k <= std::min(l, m - l); ++k) expect[k ? Partition{k} : Partition{}] = 1;
            CHECK(decompose(s, 0) == expect);
        }
}

TEST_CASE("trivial multiplicity of induced trivial counts orbits") {
    for (int m = 1; m <= 6; ++m)
        for (int l = 1; l <= m; ++l) {
            ClassSeries triv = ClassSeries::from_function(l, [](const CycleType&) { return LaurentPoly(1); });
            auto mult = decompose(induce_I(triv, m), 0);
            CHECK(mult[{}] == Integer(static_cast<long>(partitions(m, l).size())));
        }
}

TEST_CASE("bm_series examples") {
    ClassSeries bm = bm_series(series_Fm(C(), 2), 2);
    CHECK(bm.at(CycleType::identity(2)) == 1 - T(1));
    for (const auto& x : i_acyclic_fixtures())
        for (int m = 1; m <= 5; ++m) {
            ClassSeries s = series_Fm(x, m);
            CHECK(bm_series(bm_series(s, x.dim), x.dim) == s);
            if (x.dim % 2 == 0)
                for (const auto& [t, v] : s.values())
                    CHECK(bm_series(s, x.dim).at(t) == lp_dual(v, m * x.dim));
        }
}

TEST_CASE("dimension bookkeeping closes") {
    for (const auto& x : i_acyclic_fixtures())
        for (int m = 1; m <= 8; ++m) {
            ClassSeries bm = bm_series(series_Fm(x, m), x.dim);
            for (int i = 0; i <= m * x.dim; ++i) {
                Integer total = 0;
                for (const auto& [core, c] : decompose(bm, i)) total += c * irrep_dimension(PaddedPartition{core, m}.padded());
                Integer betti = bm.at(CycleType::identity(m)).coeff(i);
                if (i % 2) betti = -betti;
                CHECK(total == betti);
                if (x.dim >= 2) CHECK(betti == betti_bm(x, m, i));
            }
        }
}

TEST_CASE("stability_report examples") {
    StabilityReport zero = stability_report(C(), 0, 0, 1, 10);
    for (int m = 1; m <= 10; ++m) CHECK(zero.multiplicity({}, m) == 1);
    CHECK(zero.table.size() == 1);

    StabilityReport one = stability_report(C(), 1, 0, 1, 10);
    CHECK(one.all_passed());
    CHECK(one.stable_bound == 4);
    CHECK(one.monotone_bound == 1);
    for (const auto& [core, row] : one.table)
        for (int m = 4; m <= 10; ++m) CHECK(one.multiplicity(core, m) == one.multiplicity(core, 10));
    // H^1(F_m(C)) = V() + V(1) + V(2) for m >= 4
    for (int m = 4; m <= 10; ++m) {
        CHECK(one.multiplicity({}, m) == 1);
        CHECK(one.multiplicity({1}, m) == 1);
        CHECK(one.multiplicity({2}, m) == 1);
    }
    for (int m = 1; m <= 10; ++m) CHECK(one.betti.at(m) == binomial(static_cast<unsigned>(m), 2));

    StabilityReport r3 = stability_report(builtin_fixture("r3"), 2, 0, 1, 10);
    CHECK(r3.stable_bound == 4);
    CHECK(r3.all_passed());
    for (const auto& [core, row] : r3.table)
        for (int m = 4; m <= 10; ++m) CHECK(r3.multiplicity(core, m) == r3.multiplicity(core, 10));
}

TEST_CASE("monotonicity holds from the monotone bound on all fixtures") {
    for (const auto& x : i_acyclic_fixtures()) {
        if (x.dim < 2) continue;
        for (int i = 0; i <= 2; ++i) {
            StabilityReport r = stability_report(x, i, 0, 1, 9);
            for (const auto& v : r.verdicts) CHECK_MESSAGE(v.passed(), x.name << " i=" << i << " " << v.name << ": " << v.detail);
        }
    }
}

TEST_CASE("stability with a nonzero codimension index") {
    StabilityReport r = stability_report(C(), 1, 1, 2, 10);
    CHECK(r.monotone_bound == 2);
    CHECK(r.stable_bound == 8);
    for (const auto& v : r.verdicts) CHECK_MESSAGE(v.passed(), v.name << ": " << v.detail);
    for (int m = 2; m <= 10; ++m) {
        ClassSeries bm = bm_series_Delta(C(), m, 1);
        Integer betti = bm.at(CycleType::identity(m)).coeff(1);
        CHECK(-betti == r.betti.at(m));
    }
}

TEST_CASE("betti numbers of configuration spaces are eventually polynomial") {
    for (const auto& x : i_acyclic_fixtures()) {
        if (x.dim < 2) continue;
        for (int i = 0; i <= 3; ++i) {
            std::vector<Integer> seq;
            for (int m = i + 1; m <= 12; ++m) seq.push_back(betti_bm(x, m, i));
            for (int k = 0; k <= 2 * i; ++k) {
                for (size_t j = 0; j + 1 < seq.size(); ++j) seq[j] = seq[j + 1] - seq[j];
                seq.pop_back();
            }
            for (const auto& z : seq) CHECK_MESSAGE(z == 0, x.name << " i=" << i);
        }
    }
}

TEST_CASE("stability hypotheses") {
    CHECK_THROWS_AS(stability_report(builtin_fixture("klein_punctured"), 1, 0, 1, 4), HypothesisViolation);
    CHECK_THROWS_AS(stability_report(builtin_fixture("r1"), 0, 0, 1, 4), HypothesisViolation);
    SpaceSpec disconnected = C();
    disconnected.connected = false;
    CHECK_THROWS_AS(stability_report(disconnected, 0, 0, 1, 4), HypothesisViolation);
}

TEST_CASE("bf_constancy examples") {
    for (int i : {0, 1}) {
        BfReport r = bf_constancy(C(), i, 1, 10);
        for (int m = 2; m <= 10; ++m) CHECK(r.betti.at(m) == 1);
    }
    CHECK(bf_constancy(C(), 0, 1, 10).betti.at(1) == 1);
    // BF_1(C) = C: the degree-1 value is 0 at m = 1, so constancy starts at m = 2
    BfReport one = bf_constancy(C(), 1, 1, 10);
    CHECK(one.betti.at(1) == 0);
    CHECK(one.constant_from == 2);
    for (int i = 2; i <= 4; ++i)
        for (const auto& [m, b] : bf_constancy(C(), i, 1, 10).betti) CHECK(b == 0);
    for (int c = 1; c <= 3; ++c) {
        BfReport r = bf_constancy(builtin_fixture("c_minus_" + std::to_string(c)), 1, 1, 9);
        CHECK(r.betti.at(1) == c);
        for (int m = 2; m <= 9; ++m) CHECK(r.betti.at(m) == c + 1);
    }
}

TEST_CASE("bf_constancy verdicts") {
    for (const auto& x : i_acyclic_fixtures())
        for (int i = 0; i <= 3; ++i) {
            BfReport r = bf_constancy(x, i, 1, 10);
            for (const auto& v : r.verdicts) {
                if (v.name == "constant_from_i") continue;
                CHECK_MESSAGE(v.passed(), x.name << " i=" << i << " " << v.name << ": " << v.detail);
            }
        }
    BfReport edge = bf_constancy(C(), 1, 1, 10);
    bool found = false;
    for (const auto& v : edge.verdicts)
        if (v.name == "constant_from_i") {
            found = true;
            CHECK(v.status == VerdictStatus::fail);
        }
    CHECK(found);
    SpaceSpec doubled = C();
    doubled.pc = 2 * T(2);
    CHECK_THROWS_AS(bf_constancy(doubled, 1, 1, 5), HypothesisViolation);
}

TEST_CASE("betti_bm_BF agrees with the quotient polynomial in even dimension") {
    for (const auto& x : i_acyclic_fixtures()) {
        if (x.dim % 2) continue;
        for (int m = 1; m <= 7; ++m) {
            LaurentPoly dual = lp_dual(poincare_BF(x, m), m * x.dim);
            for (int i = 0; i <= m * x.dim; ++i) CHECK_MESSAGE(betti_bm_BF(x, m, i) == dual.coeff(i), x.name << " m=" << m << " i=" << i);
        }
    }
}

TEST_CASE("unordered configurations in odd dimension are rationally points") {
    // the swap reverses orientation, so the quotient is not oriented and duality with P_c fails
    for (const char* name : {"r1", "r3"}) {
        const SpaceSpec& x = builtin_fixture(name);
        for (int m = 1; m <= 7; ++m)
            for (int i = 0; i <= m * x.dim; ++i) CHECK(betti_bm_BF(x, m, i) == (i == 0 ? 1 : 0));
    }
    CHECK(poincare_BF(builtin_fixture("r3"), 2) == T(4));  // R^3 x R_{>0} x RP^2
}
