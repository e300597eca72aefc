#pragma once

#include "confcohom/bipoly.hpp"
#include "confcohom/laurent.hpp"

#include <string>

namespace confcohom {

/// Description of a space X through its compactly supported Poincare
/// polynomial and the flags the closed formulas depend on. i-acyclicity
/// cannot be decided from pc; it is asserted by the caller.
struct SpaceSpec {
    std::string name;
    LaurentPoly pc;
    int dim = 0;
    bool i_acyclic = false;
    bool orientable = false;
    bool connected = false;

    /// Throws ParseError when pc has negative coefficients, exponents outside
    /// [0, dim], or a constant term on an i-acyclic space.
    void validate() const;
    /// chi_c(X) = pc(-1).
    Integer euler_c() const { return pc.eval(-1); }
    /// chi_c(X)(1, T) = pc(-T).
    LaurentPoly char_series() const;
};

/// chi_c(F_m(X)): the falling factorial of chi_c(X). No hypothesis needed.
Integer euler_char_Fm(const SpaceSpec& x, int m);

/// P_c(F_m(X)) = prod_{i<m} (pc + i T). Requires i_acyclic.
LaurentPoly poincare_Fm(const SpaceSpec& x, int m);

/// P_c of Delta_l X^m (closed = false) or Delta_{<=l} X^m (closed = true).
/// l = 0 gives the point for m = 0 and the empty space otherwise.
LaurentPoly poincare_Delta(const SpaceSpec& x, int l, int m, bool closed);

/// Universal polynomial in Z[P, T], homogeneous of degree l; evaluating at
/// P = pc gives poincare_Delta.
BiPoly universal_poly(int l, int m, bool closed);

/// Ordinary Poincare polynomial of F_m(X) by Poincare duality. Requires the
/// orientable flag; only meaningful when X is a topological manifold.
LaurentPoly poincare_ordinary(const SpaceSpec& x, int m);

/// dim H_BM^i(F_m(X)) = coefficient of T^{m dim - i} in P_c(F_m(X)).
Integer betti_bm(const SpaceSpec& x, int m, int i);

void require_i_acyclic(const SpaceSpec& x, const std::string& op);
void require_orientable(const SpaceSpec& x, const std::string& op);

}  // namespace confcohom
