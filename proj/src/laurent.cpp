#include "confcohom/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace confcohom {

LaurentPoly::LaurentPoly(long c) { add_term(0, Integer(c)); }

LaurentPoly::LaurentPoly(const Integer& c) { add_term(0, c); }

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<const int, Integer>> terms) {
    for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly::LaurentPoly(Terms terms) {
    for (auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly LaurentPoly::monomial(const Integer& c, int exponent) {
    LaurentPoly p;
    p.add_term(exponent, c);
    return p;
}

void LaurentPoly::add_term(int exponent, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Integer LaurentPoly::coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Integer(0) : it->second;
}

int LaurentPoly::min_exponent() const { return terms_.begin()->first; }

int LaurentPoly::max_exponent() const { return terms_.rbegin()->first; }

bool LaurentPoly::nonnegative() const {
    for (const auto& [e, c] : terms_)
        if (c < 0) return false;
    return true;
}

Integer LaurentPoly::eval(long t) const {
    if (t == 0) {
        if (!terms_.empty() && min_exponent() < 0) throw std::domain_error("eval at 0 with negative exponents");
        return coeff(0);
    }
    // Horner is awkward for sparse Laurent data; powers are small here.
    Integer num = 0;
    int lo = terms_.empty() ? 0 : std::min(0, min_exponent());
    for (const auto& [e, c] : terms_) {
        Integer p;
        mpz_pow_ui(p.get_mpz_t(), Integer(t).get_mpz_t(), static_cast<unsigned long>(e - lo));
        num += c * p;
    }
    if (lo == 0) return num;
    Integer den;
    mpz_pow_ui(den.get_mpz_t(), Integer(t).get_mpz_t(), static_cast<unsigned long>(-lo));
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw std::domain_error("Laurent evaluation is not an integer");
    return num / den;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Integer& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out = *this;
    for (auto& [e, v] : out.terms_) v = -v;
    return out;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
    LaurentPoly out(1);
    LaurentPoly base = *this;
    while (n) {
        if (n & 1u) out *= base;
        n >>= 1;
        if (n) base = base * base;
    }
    return out;
}

LaurentPoly LaurentPoly::shift(int k) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + k, c);
    return out;
}

bool LaurentPoly::divide_exact(const Integer& d, LaurentPoly* out) const {
    if (d == 0) return false;
    LaurentPoly q;
    for (const auto& [e, c] : terms_) {
        if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t())) return false;
        Integer v;
        mpz_divexact(v.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
        q.terms_.emplace_hint(q.terms_.end(), e, v);
    }
    *out = std::move(q);
    return true;
}

bool LaurentPoly::divisible_by(const Integer& p) const {
    for (const auto& [e, c] : terms_)
        if (!mpz_divisible_p(c.get_mpz_t(), p.get_mpz_t())) return false;
    return true;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Integer mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << "*";
        os << "T";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

LaurentPoly lp_ring(const LaurentPoly& a, const LaurentPoly& b, RingOp op) {
    switch (op) {
        case RingOp::add: return a + b;
        case RingOp::sub: return a - b;
        case RingOp::mul: return a * b;
    }
    throw std::logic_error("unreachable");
}

LaurentPoly lp_substitute(const LaurentPoly& f, int e, bool negate) {
    if (e < 1) throw std::invalid_argument("lp_substitute: exponent multiplier must be >= 1");
    LaurentPoly::Terms out;
    for (const auto& [k, c] : f.terms()) {
        bool flip = negate && (k % 2 != 0);
        out.emplace(e * k, flip ? Integer(-c) : c);
    }
    return LaurentPoly(std::move(out));
}

LaurentPoly lp_dual(const LaurentPoly& f, int d) {
    LaurentPoly::Terms out;
    for (const auto& [k, c] : f.terms()) out.emplace(d - k, c);
    return LaurentPoly(std::move(out));
}

LaurentPoly lp_negate_var(const LaurentPoly& f) { return lp_substitute(f, 1, true); }

}  // namespace confcohom
