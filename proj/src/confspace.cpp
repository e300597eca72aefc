#include "confcohom/confspace.hpp"

#include "confcohom/combinat.hpp"
#include "confcohom/errors.hpp"

#include <stdexcept>

namespace confcohom {

void SpaceSpec::validate() const {
    if (dim < 0) throw ParseError("space '" + name + "': negative dimension");
    for (const auto& [e, c] : pc.terms()) {
        if (c < 0) throw ParseError("space '" + name + "': negative Betti number in poincare_c");
        if (e < 0 || e > dim)
            throw ParseError("space '" + name + "': exponent " + std::to_string(e) + " outside [0, dim]");
    }
    if (i_acyclic && pc.coeff(0) != 0)
        throw ParseError("space '" + name + "': i-acyclic space must have H_c^0 = 0");
}

LaurentPoly SpaceSpec::char_series() const { return lp_negate_var(pc); }

void require_i_acyclic(const SpaceSpec& x, const std::string& op) {
    if (!x.i_acyclic)
        throw HypothesisViolation("i_acyclic", op + ": space '" + x.name + "' is not flagged i_acyclic");
}

void require_orientable(const SpaceSpec& x, const std::string& op) {
    if (!x.orientable)
        throw HypothesisViolation("orientable", op + ": space '" + x.name + "' is not flagged orientable");
}

Integer euler_char_Fm(const SpaceSpec& x, int m) {
    if (m < 0) throw std::invalid_argument("euler_char_Fm: negative m");
    Integer chi = x.euler_c();
    Integer out = 1;
    for (int i = 0; i < m; ++i) out *= chi - i;
    return out;
}

LaurentPoly poincare_Fm(const SpaceSpec& x, int m) {
    require_i_acyclic(x, "poincare_Fm");
    if (m < 0) throw std::invalid_argument("poincare_Fm: negative m");
    return lp_falling_product(x.pc, -LaurentPoly::T(), static_cast<unsigned>(m));
}

LaurentPoly poincare_Delta(const SpaceSpec& x, int l, int m, bool closed) {
    require_i_acyclic(x, "poincare_Delta");
    if (m < 0 || l < 0 || l > m) throw std::invalid_argument("poincare_Delta: need 0 <= l <= m");
    if (l == 0) return m == 0 ? LaurentPoly(1) : LaurentPoly();
    if (!closed) return stirling(StirlingKind::second, m, l) * poincare_Fm(x, l);
    LaurentPoly out;
    for (int a = 0; a < l; ++a) {
        LaurentPoly term = stirling(StirlingKind::second, m, l - a) * poincare_Fm(x, l - a).shift(a);
        if (a % 2) out -= term;
        else out += term;
    }
    if (!out.nonnegative())
        throw ConsistencyError("poincare_Delta: alternating sum has a negative coefficient (" + out.to_string() +
                               "); input is not compatible with i-acyclicity");
    return out;
}

BiPoly universal_poly(int l, int m, bool closed) {
    if (l < 1 || l > m) throw std::invalid_argument("universal_poly: need 1 <= l <= m");
    auto open_part = [&](int k) {
        return falling_product(BiPoly::P(), BiPoly::T() * Integer(-1), static_cast<unsigned>(k)) *
               stirling(StirlingKind::second, m, k);
    };
    if (!closed) return open_part(l);
    BiPoly out;
    for (int a = 0; a < l; ++a) {
        BiPoly term = open_part(l - a) * BiPoly::monomial(a % 2 ? -1 : 1, 0, a);
        out += term;
    }
    return out;
}

LaurentPoly poincare_ordinary(const SpaceSpec& x, int m) {
    require_orientable(x, "poincare_ordinary");
    return lp_dual(poincare_Fm(x, m), m * x.dim);
}

Integer betti_bm(const SpaceSpec& x, int m, int i) {
    require_orientable(x, "betti_bm");
    if (i < 0) throw std::invalid_argument("betti_bm: negative degree");
    return poincare_Fm(x, m).coeff(m * x.dim - i);
}

}  // namespace confcohom
