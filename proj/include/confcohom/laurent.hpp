#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <map>
#include <string>
#include <utility>

namespace confcohom {

using Integer = mpz_class;

/// Integer-coefficient Laurent polynomial in one variable T.
///
/// Stored as a sparse exponent -> coefficient map with no zero entries, so
/// structural equality is polynomial equality.
class LaurentPoly {
public:
    using Terms = std::map<int, Integer>;

    LaurentPoly() = default;
    LaurentPoly(long c);  // NOLINT: constants convert implicitly
    LaurentPoly(const Integer& c);  // NOLINT
    LaurentPoly(std::initializer_list<std::pair<const int, Integer>> terms);
    explicit LaurentPoly(Terms terms);

    static LaurentPoly monomial(const Integer& c, int exponent);
    static LaurentPoly T(int exponent = 1) { return monomial(1, exponent); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Integer coeff(int exponent) const;
    int min_exponent() const;  // requires !is_zero()
    int max_exponent() const;  // requires !is_zero()
    bool nonnegative() const;

    Integer eval(long t) const;  // requires t != 0 when negative exponents are present

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Integer& c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Integer& c) { return a *= c; }
    friend LaurentPoly operator*(const Integer& c, LaurentPoly a) { return a *= c; }
    friend LaurentPoly operator*(LaurentPoly a, long c) { return a *= Integer(c); }
    friend LaurentPoly operator*(long c, LaurentPoly a) { return a *= Integer(c); }
    LaurentPoly operator-() const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

    LaurentPoly pow(unsigned n) const;
    /// Multiply by T^k.
    LaurentPoly shift(int k) const;
    /// Exact division of every coefficient; returns false (leaving *out untouched)
    /// when some coefficient is not divisible.
    bool divide_exact(const Integer& d, LaurentPoly* out) const;
    /// Every coefficient reduced modulo p is zero.
    bool divisible_by(const Integer& p) const;

    std::string to_string() const;

private:
    void add_term(int exponent, const Integer& c);
    Terms terms_;
};

enum class RingOp { add, sub, mul };

LaurentPoly lp_ring(const LaurentPoly& a, const LaurentPoly& b, RingOp op);

/// f(s * T^e), s = -1 when negate is set. Throws std::invalid_argument for e < 1.
LaurentPoly lp_substitute(const LaurentPoly& f, int e, bool negate);

/// T^d * f(1/T).
LaurentPoly lp_dual(const LaurentPoly& f, int d);

/// f(-T).
LaurentPoly lp_negate_var(const LaurentPoly& f);

/// prod_{i=0}^{n-1} (f - i*g); works for any commutative ring type with
/// integer scaling (LaurentPoly, BiPoly).
template <class Poly>
Poly falling_product(const Poly& f, const Poly& g, unsigned n) {
    Poly out(1);
    for (unsigned i = 0; i < n; ++i) {
        out = out * (f - g * Integer(i));
    }
    return out;
}

inline LaurentPoly lp_falling_product(const LaurentPoly& f, const LaurentPoly& g, unsigned n) {
    return falling_product(f, g, n);
}

}  // namespace confcohom
