#include "confcohom/bipoly.hpp"

#include <sstream>
#include <vector>

namespace confcohom {

BiPoly::BiPoly(long c) { add_term({0, 0}, Integer(c)); }

BiPoly BiPoly::monomial(const Integer& c, int p_exp, int t_exp) {
    BiPoly b;
    b.add_term({p_exp, t_exp}, c);
    return b;
}

void BiPoly::add_term(const Key& k, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Integer BiPoly::coeff(int p_exp, int t_exp) const {
    auto it = terms_.find({p_exp, t_exp});
    return it == terms_.end() ? Integer(0) : it->second;
}

bool BiPoly::is_homogeneous(int degree) const {
    for (const auto& [k, c] : terms_)
        if (k.first + k.second != degree) return false;
    return true;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly out;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            out.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    return out;
}

BiPoly operator*(BiPoly a, const Integer& c) {
    if (c == 0) return BiPoly();
    for (auto& [k, v] : a.terms_) v *= c;
    return a;
}

std::string BiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest P-power first, matching the usual presentation of the tables.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [k, c] = *it;
        Integer mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool wrote = false;
        if (mag != 1 || (k.first == 0 && k.second == 0)) {
            os << mag.get_str();
            wrote = true;
        }
        auto var = [&](const char* name, int e) {
            if (e == 0) return;
            if (wrote) os << "*";
            os << name;
            if (e != 1) os << "^" << e;
            wrote = true;
        };
        var("P", k.first);
        var("T", k.second);
    }
    return os.str();
}

LaurentPoly bp_eval_P(const BiPoly& q, const LaurentPoly& p) {
    std::vector<LaurentPoly> powers{LaurentPoly(1)};
    LaurentPoly out;
    for (const auto& [k, c] : q.terms()) {
        while (static_cast<int>(powers.size()) <= k.first) powers.push_back(powers.back() * p);
        out += powers[k.first].shift(k.second) * c;
    }
    return out;
}

}  // namespace confcohom
