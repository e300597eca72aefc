#pragma once

#include "confcohom/charseries.hpp"
#include "confcohom/combinat.hpp"
#include "confcohom/confspace.hpp"

#include <map>
#include <string>
#include <vector>

namespace confcohom {

/// lambda[m] = (m - |lambda|, lambda_1, lambda_2, ...), the long-first-row padding.
struct PaddedPartition {
    Partition core;
    int m = 0;

    /// Throws std::invalid_argument if m < |core| + core_1.
    Partition padded() const;
    /// Strips the first row of a partition of m.
    static PaddedPartition unpad(const Partition& full);
    friend auto operator<=>(const PaddedPartition&, const PaddedPartition&) = default;
};

std::string partition_to_string(const Partition& p);

/// Irreducible S_m character chi_lambda at class mu (Murnaghan-Nakayama,
/// border strips removed on the abacus). Memoized; |lambda| = |mu| <= cap.
long long mn_character(const Partition& lambda, const CycleType& mu);

/// Dimension of the irreducible representation lambda (hook length formula).
Integer irrep_dimension(const Partition& lambda);

/// Multiplicities of the irreducibles in the degree-i character
/// chi(alpha; i) = (-1)^i [T^i] series(alpha), keyed by the core of lambda[m].
/// Zero multiplicities are omitted. Throws ConsistencyError on a
/// non-integral or negative multiplicity.
std::map<Partition, Integer> decompose(const ClassSeries& series, int degree);

/// Borel-Moore series of an oriented space of dimension space_dim carrying the
/// compact-support series `series` of S_m:
/// sgn(alpha)^d (-T)^{m d} series(alpha^{-1}, 1/T).
ClassSeries bm_series(const ClassSeries& series, int space_dim);

enum class VerdictStatus { pass, fail, undetermined };

struct Verdict {
    std::string name;
    VerdictStatus status = VerdictStatus::undetermined;
    std::string detail;
    bool passed() const { return status != VerdictStatus::fail; }
};

struct StabilityOptions {
    int poly_window = 4;  // vanishing finite differences required to call a degree
};

/// Multiplicities c(lambda)_m of H_BM^i(Delta_{m-a} X^m) over a window of m.
struct StabilityReport {
    int degree = 0;
    int a = 0;
    int m_first = 0;
    int m_last = 0;
    int monotone_bound = 0;  // i + a
    int stable_bound = 0;    // 4i+4a for surfaces, 2i+4a above
    std::map<Partition, std::map<int, Integer>> table;  // core -> m -> c(core)_m
    std::map<int, Integer> betti;                        // m -> Betti_BM^i
    std::vector<Verdict> verdicts;

    Integer multiplicity(const Partition& core, int m) const;
    bool all_passed() const;
};

/// Requires i_acyclic, orientable, connected and dim >= 2.
StabilityReport stability_report(const SpaceSpec& x, int degree, int a, int m_first, int m_last,
                                 const StabilityOptions& options = {});

/// Borel-Moore series of F_{m-a} induced up to Delta_{m-a} X^m.
ClassSeries bm_series_Delta(const SpaceSpec& x, int m, int a);

struct BfReport {
    int degree = 0;
    std::map<int, Integer> betti;  // m -> Betti_BM^i(F_m(X)/S_m)
    int constant_from = 0;         // smallest m0 with the tail [m0, m_last] constant
    std::vector<Verdict> verdicts;
    bool all_passed() const;
};

/// Betti_BM^i of the unordered configuration spaces over [m_first, m_last],
/// with the constancy ranges expected for i-acyclic spaces. Requires
/// i_acyclic, orientable and a top compact Betti number <= 1.
BfReport bf_constancy(const SpaceSpec& x, int degree, int m_first, int m_last);

/// Betti_BM^i(F_m(X)/S_m) for a single m.
Integer betti_bm_BF(const SpaceSpec& x, int m, int degree);

}  // namespace confcohom
