#pragma once

#include "confcohom/combinat.hpp"
#include "confcohom/confspace.hpp"
#include "confcohom/laurent.hpp"

#include <functional>
#include <map>
#include <vector>

namespace confcohom {

/// A graded class function of S_m presented as a series:
/// alpha -> sum_i (-1)^i tr(alpha | V^i) T^i, one entry per cycle type.
class ClassSeries {
public:
    ClassSeries() = default;
    explicit ClassSeries(int m);  // zero series on every class
    static ClassSeries from_function(int m, const std::function<LaurentPoly(const CycleType&)>& f);

    int m() const { return m_; }
    const std::map<CycleType, LaurentPoly>& values() const { return values_; }
    const LaurentPoly& at(const CycleType& type) const;
    void set(const CycleType& type, LaurentPoly value);

    ClassSeries& operator+=(const ClassSeries& o);
    ClassSeries& operator-=(const ClassSeries& o);
    /// Pointwise product with a fixed polynomial.
    ClassSeries& operator*=(const LaurentPoly& p);
    friend ClassSeries operator+(ClassSeries a, const ClassSeries& b) { return a += b; }
    friend ClassSeries operator-(ClassSeries a, const ClassSeries& b) { return a -= b; }
    friend ClassSeries operator*(ClassSeries a, const LaurentPoly& p) { return a *= p; }
    friend bool operator==(const ClassSeries&, const ClassSeries&) = default;

private:
    int m_ = 0;
    std::map<CycleType, LaurentPoly> values_;
};

/// dims[k] = dimension of the degree-k part of a graded vector space.
using GradedDims = std::vector<int>;

/// chi_c(X^m)(alpha, T) = prod_d chi_c(X)(1, T^d)^{x_d}.
LaurentPoly char_Xm(const SpaceSpec& x, const CycleType& type);
ClassSeries series_Xm(const SpaceSpec& x, int m);

/// Trace of a type-lambda permutation on the m-fold graded tensor power, with
/// Koszul signs, by direct enumeration of basis tensors. Guarded to
/// total dimension <= 4 and m <= 6.
LaurentPoly tensor_trace_oracle(const GradedDims& dims, const CycleType& type);

/// chi_c(F_m(X))(alpha, T) for i-acyclic X, in denominator-free form:
/// prod_d prod_{i<x_d} (B_d(T) - i d T^d) with
/// B_d(T) = sum_{e|d} mu(d/e) T^{d-e} chi_c(X)(1, T^e).
LaurentPoly char_Fm(const SpaceSpec& x, const CycleType& type);
ClassSeries series_Fm(const SpaceSpec& x, int m);

/// Trace on H_c(Delta_l X^m) from the open decomposition into copies of F_l.
LaurentPoly char_Delta_oracle(const SpaceSpec& x, int l, int m, const Permutation& alpha);

/// Trace on H_c(Delta_{<=l} X^m) assembled from the fundamental complex.
LaurentPoly char_Delta_le(const SpaceSpec& x, int l, int m, const Permutation& alpha);

/// I_l^m: sum over alpha-stable l-block partitions of f at the induced block permutation.
ClassSeries induce_I(const ClassSeries& f, int m);

/// Theta_l^m = (-1)^{m-l} sum over chains m = m_0 > ... > m_t = l of (-1)^t I(chain),
/// evaluated by dynamic programming over the intermediate sizes.
ClassSeries induce_Theta(const ClassSeries& f, int m);

/// Same operator by explicit enumeration of every chain.
ClassSeries induce_Theta_chains(const ClassSeries& f, int m);

/// Character series of F_m(X) rebuilt from the product spaces X^k, k <= m:
/// sum_{a<m} (-T)^a Theta_{m-a}^m(chi_c(X^{m-a})).
ClassSeries reconstruct_char_Fm(const SpaceSpec& x, int m);

/// P_c(Z/H) from the character series of Z averaged over H (counts per type).
LaurentPoly quotient_poincare(const ClassSeries& series, const SubgroupClasses& subgroup);

/// Undivided bracket sum_{d|m} phi(d) chi_c(F_m)(sigma^{m/d}, T); divisible by m.
LaurentPoly cf_numerator(const SpaceSpec& x, int m);

/// P_c(F_m(X)/C_m), closed form.
LaurentPoly poincare_CF(const SpaceSpec& x, int m);

/// P_c(F_m(X)/S_m), closed form.
LaurentPoly poincare_BF(const SpaceSpec& x, int m);

/// P_c of the symmetric (cyclic = false) or cyclic product of X. The symmetric
/// case is cross-checked against the generating function expansion.
LaurentPoly poincare_sym_product(const SpaceSpec& x, int m, bool cyclic);

/// Coefficient of t^m in prod_{k odd}(1 + x^k t)^{b_k} / prod_{k even}(1 - x^k t)^{b_k},
/// read as a polynomial in x (b_k = coefficients of pc).
LaurentPoly symmetric_product_gf(const LaurentPoly& pc, int m);

}  // namespace confcohom
