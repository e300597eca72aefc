#pragma once

#include "confcohom/confspace.hpp"
#include "confcohom/io.hpp"
#include "confcohom/laurent.hpp"

#include <random>

namespace testing {

using confcohom::Integer;
using confcohom::LaurentPoly;

inline LaurentPoly T(int e = 1) { return LaurentPoly::T(e); }

// Fixed seed: failures reproduce.
inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(20261019);
    return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline LaurentPoly random_poly(int min_exp, int max_exp, int coeff_bound, int terms) {
    LaurentPoly p;
    for (int k = 0; k < terms; ++k)
        p += LaurentPoly::monomial(uniform(-coeff_bound, coeff_bound), uniform(min_exp, max_exp));
    return p;
}

// pc with nonnegative coefficients, no constant term, degree <= max_deg.
inline confcohom::SpaceSpec random_i_acyclic(int max_deg) {
    confcohom::SpaceSpec x;
    x.name = "random";
    x.dim = max_deg;
    x.i_acyclic = x.orientable = x.connected = true;
    while (x.pc.is_zero())
        for (int e = 1; e <= max_deg; ++e) x.pc += LaurentPoly::monomial(uniform(0, 3), e);
    return x;
}

}  // namespace testing
