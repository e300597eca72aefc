#pragma once

#include "confcohom/laurent.hpp"

#include <map>
#include <string>
#include <utility>

namespace confcohom {

/// Integer polynomial in two variables (P, T); keys are (P-exponent, T-exponent).
class BiPoly {
public:
    using Key = std::pair<int, int>;
    using Terms = std::map<Key, Integer>;

    BiPoly() = default;
    BiPoly(long c);  // NOLINT
    static BiPoly monomial(const Integer& c, int p_exp, int t_exp);
    static BiPoly P() { return monomial(1, 1, 0); }
    static BiPoly T() { return monomial(1, 0, 1); }

    const Terms& terms() const { return terms_; }
    Integer coeff(int p_exp, int t_exp) const;
    bool is_homogeneous(int degree) const;

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(BiPoly a, const Integer& c);
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

    std::string to_string() const;

private:
    void add_term(const Key& k, const Integer& c);
    Terms terms_;
};

/// Substitute P := p; T stays T.
LaurentPoly bp_eval_P(const BiPoly& q, const LaurentPoly& p);

}  // namespace confcohom
