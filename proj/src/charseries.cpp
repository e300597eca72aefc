#include "confcohom/charseries.hpp"

#include "confcohom/errors.hpp"
#include "confcohom/limits.hpp"

#include <stdexcept>

namespace confcohom {

// --------------------------------------------------------------- ClassSeries

ClassSeries::ClassSeries(int m) : m_(m) {
    for (const auto& t : partitions(m)) values_.emplace(t, LaurentPoly());
}

ClassSeries ClassSeries::from_function(int m, const std::function<LaurentPoly(const CycleType&)>& f) {
    ClassSeries s;
    s.m_ = m;
    for (const auto& t : partitions(m)) s.values_.emplace(t, f(t));
    return s;
}

const LaurentPoly& ClassSeries::at(const CycleType& type) const {
    auto it = values_.find(type);
    if (it == values_.end())
        throw std::invalid_argument("ClassSeries::at: type " + type.to_string() + " not a class of S_" +
                                    std::to_string(m_));
    return it->second;
}

void ClassSeries::set(const CycleType& type, LaurentPoly value) {
    if (type.size() != m_) throw std::invalid_argument("ClassSeries::set: size mismatch");
    values_[type] = std::move(value);
}

ClassSeries& ClassSeries::operator+=(const ClassSeries& o) {
    if (o.m_ != m_) throw std::invalid_argument("ClassSeries: adding series of different S_m");
    for (const auto& [t, v] : o.values_) values_[t] += v;
    return *this;
}

ClassSeries& ClassSeries::operator-=(const ClassSeries& o) {
    if (o.m_ != m_) throw std::invalid_argument("ClassSeries: subtracting series of different S_m");
    for (const auto& [t, v] : o.values_) values_[t] -= v;
    return *this;
}

ClassSeries& ClassSeries::operator*=(const LaurentPoly& p) {
    for (auto& [t, v] : values_) v *= p;
    return *this;
}

// ------------------------------------------------------------------- X^m

namespace {

void check_cycle_cap(int m, const char* op) {
    if (m > limits().max_cycle_m)
        throw CostCapExceeded(std::string(op) + ": m=" + std::to_string(m) + " exceeds cap " +
                              std::to_string(limits().max_cycle_m));
}

}  // namespace

LaurentPoly char_Xm(const SpaceSpec& x, const CycleType& type) {
    LaurentPoly c = x.char_series();
    LaurentPoly out(1);
    for (int d = 1; d <= type.size(); ++d) {
        if (type.x(d) == 0) continue;
        out *= lp_substitute(c, d, false).pow(static_cast<unsigned>(type.x(d)));
    }
    return out;
}

ClassSeries series_Xm(const SpaceSpec& x, int m) {
    check_cycle_cap(m, "series_Xm");
    return ClassSeries::from_function(m, [&](const CycleType& t) { return char_Xm(x, t); });
}

LaurentPoly tensor_trace_oracle(const GradedDims& dims, const CycleType& type) {
    std::vector<int> basis_degree;
    for (size_t k = 0; k < dims.size(); ++k)
        for (int j = 0; j < dims[k]; ++j) basis_degree.push_back(static_cast<int>(k));
    int m = type.size();
    if (basis_degree.size() > 4 || m > 6)
        throw CostCapExceeded("tensor_trace_oracle: needs total dimension <= 4 and m <= 6");
    Permutation alpha = Permutation::representative(type);
    int n = static_cast<int>(basis_degree.size());
    LaurentPoly out;
    if (n == 0) return m == 0 ? LaurentPoly(1) : out;

    // Factor at position i moves to position alpha(i).
    std::vector<int> choice(static_cast<size_t>(m), 0);
    while (true) {
        bool fixed = true;
        for (int i = 0; i < m && fixed; ++i) fixed = choice[alpha(i)] == choice[i];
        if (fixed) {
            int degree = 0;
            int sign = 1;
            for (int i = 0; i < m; ++i) degree += basis_degree[choice[i]];
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j)
                    if (alpha(i) > alpha(j) && (basis_degree[choice[i]] * basis_degree[choice[j]]) % 2) sign = -sign;
            if (degree % 2) sign = -sign;
            out += LaurentPoly::monomial(sign, degree);
        }
        int pos = 0;
        while (pos < m && ++choice[pos] == n) choice[pos++] = 0;
        if (pos == m) break;
    }
    return out;
}

// ------------------------------------------------------------------- F_m

namespace {

LaurentPoly moebius_block(const LaurentPoly& c, int d) {
    LaurentPoly b;
    for (long e : divisors(d)) {
        int mu = mobius(d / e);
        if (mu == 0) continue;
        LaurentPoly term = lp_substitute(c, static_cast<int>(e), false).shift(d - static_cast<int>(e));
        if (mu > 0) b += term;
        else b -= term;
    }
    return b;
}

// prod_{i<x} (B_d - i d T^d)
LaurentPoly cycle_block(const LaurentPoly& c, int d, int x) {
    return lp_falling_product(moebius_block(c, d), LaurentPoly::monomial(d, d), static_cast<unsigned>(x));
}

}  // namespace

LaurentPoly char_Fm(const SpaceSpec& x, const CycleType& type) {
    require_i_acyclic(x, "char_Fm");
    LaurentPoly c = x.char_series();
    LaurentPoly out(1);
    for (int d = 1; d <= type.size(); ++d) {
        if (type.x(d) == 0) continue;
        out *= cycle_block(c, d, type.x(d));
    }
    return out;
}

ClassSeries series_Fm(const SpaceSpec& x, int m) {
    require_i_acyclic(x, "series_Fm");
    check_cycle_cap(m, "series_Fm");
    return ClassSeries::from_function(m, [&](const CycleType& t) { return char_Fm(x, t); });
}

// ------------------------------------------------------------------- Delta

LaurentPoly char_Delta_oracle(const SpaceSpec& x, int l, int m, const Permutation& alpha) {
    require_i_acyclic(x, "char_Delta_oracle");
    if (alpha.size() != m) throw std::invalid_argument("char_Delta_oracle: permutation not in S_m");
    if (l < 1 || l > m) throw std::invalid_argument("char_Delta_oracle: need 1 <= l <= m");
    if (m > limits().max_oracle_m)
        throw CostCapExceeded("char_Delta_oracle: m=" + std::to_string(m) + " exceeds oracle cap " +
                              std::to_string(limits().max_oracle_m));
    LaurentPoly out;
    for (const auto& fp : fixed_partitions(alpha, l)) out += char_Fm(x, fp.block_action.cycle_type());
    return out;
}

LaurentPoly char_Delta_le(const SpaceSpec& x, int l, int m, const Permutation& alpha) {
    LaurentPoly out;
    for (int a = 0; a < l; ++a) out += char_Delta_oracle(x, l - a, m, alpha).shift(a);
    return out;
}

// ---------------------------------------------------------------- induction

ClassSeries induce_I(const ClassSeries& f, int m) {
    int l = f.m();
    if (l < 1 || l > m) throw std::invalid_argument("induce_I: need 1 <= l <= m");
    check_cycle_cap(m, "induce_I");
    if (l == m) return f;
    return ClassSeries::from_function(m, [&](const CycleType& t) {
        LaurentPoly v;
        for (const auto& [beta, count] : stable_partition_types(t, l)) v += f.at(beta) * Integer(count);
        return v;
    });
}

ClassSeries induce_Theta(const ClassSeries& f, int m) {
    int l = f.m();
    if (l < 1 || l > m) throw std::invalid_argument("induce_Theta: need 1 <= l <= m");
    if (m - l > limits().max_theta_depth) throw CostCapExceeded("induce_Theta: m - l exceeds cap");
    // partial[k - l] = sum over chains k > ... > l of (-1)^{length} I(chain) f
    std::vector<ClassSeries> partial{f};
    for (int k = l + 1; k <= m; ++k) {
        ClassSeries g(k);
        for (int j = l; j < k; ++j) g -= induce_I(partial[j - l], k);
        partial.push_back(std::move(g));
    }
    ClassSeries out = partial.back();
    if ((m - l) % 2) out *= LaurentPoly(-1);
    return out;
}

ClassSeries induce_Theta_chains(const ClassSeries& f, int m) {
    int l = f.m();
    if (l < 1 || l > m) throw std::invalid_argument("induce_Theta_chains: need 1 <= l <= m");
    if (m - l > limits().max_theta_depth) throw CostCapExceeded("induce_Theta_chains: m - l exceeds cap");
    ClassSeries out(m);
    int inner = m - l - 1;  // candidate intermediate sizes l+1 .. m-1
    if (inner < 0) return f;
    for (unsigned mask = 0; mask < (1u << inner); ++mask) {
        ClassSeries cur = f;
        int t = 0;
        for (int k = l + 1; k < m; ++k) {
            if (!(mask & (1u << (k - l - 1)))) continue;
            cur = induce_I(cur, k);
            ++t;
        }
        cur = induce_I(cur, m);
        ++t;
        if (t % 2) out -= cur;
        else out += cur;
    }
    if ((m - l) % 2) out *= LaurentPoly(-1);
    return out;
}

ClassSeries reconstruct_char_Fm(const SpaceSpec& x, int m) {
    require_i_acyclic(x, "reconstruct_char_Fm");
    if (m < 1) throw std::invalid_argument("reconstruct_char_Fm: m must be >= 1");
    ClassSeries out(m);
    LaurentPoly shift(1);
    const LaurentPoly minus_t = -LaurentPoly::T();
    for (int a = 0; a < m; ++a) {
        out += induce_Theta(series_Xm(x, m - a), m) * shift;
        shift *= minus_t;
    }
    return out;
}

// ---------------------------------------------------------------- quotients

namespace {

LaurentPoly finish_average(const LaurentPoly& sum, const Integer& order, const std::string& op) {
    LaurentPoly avg;
    if (!sum.divide_exact(order, &avg))
        throw ConsistencyError(op + ": class sum " + sum.to_string() + " not divisible by " + order.get_str());
    LaurentPoly out = lp_negate_var(avg);
    if (!out.nonnegative()) throw ConsistencyError(op + ": negative Betti number in " + out.to_string());
    return out;
}

}  // namespace

LaurentPoly quotient_poincare(const ClassSeries& series, const SubgroupClasses& subgroup) {
    if (subgroup.m != series.m()) throw std::invalid_argument("quotient_poincare: subgroup not in S_m of series");
    Integer total = 0;
    LaurentPoly sum;
    for (const auto& [type, count] : subgroup.counts) {
        total += count;
        sum += series.at(type) * count;
    }
    if (total != subgroup.order) throw std::invalid_argument("quotient_poincare: class counts do not sum to order");
    return finish_average(sum, subgroup.order, "quotient_poincare");
}

LaurentPoly cf_numerator(const SpaceSpec& x, int m) {
    require_i_acyclic(x, "poincare_CF");
    if (m < 1) throw std::invalid_argument("poincare_CF: m must be >= 1");
    LaurentPoly c = x.char_series();
    LaurentPoly sum;
    for (long d : divisors(m)) {
        int dd = static_cast<int>(d);
        sum += cycle_block(c, dd, m / dd) * Integer(euler_phi(d));
    }
    return sum;
}

LaurentPoly poincare_CF(const SpaceSpec& x, int m) {
    return finish_average(cf_numerator(x, m), Integer(m), "poincare_CF");
}

LaurentPoly poincare_BF(const SpaceSpec& x, int m) {
    require_i_acyclic(x, "poincare_BF");
    if (m < 1) throw std::invalid_argument("poincare_BF: m must be >= 1");
    check_cycle_cap(m, "poincare_BF");
    LaurentPoly sum;
    for (const auto& t : partitions(m)) sum += char_Fm(x, t) * class_size(t);
    return finish_average(sum, factorial(static_cast<unsigned>(m)), "poincare_BF");
}

LaurentPoly symmetric_product_gf(const LaurentPoly& pc, int m) {
    if (m < 0) throw std::invalid_argument("symmetric_product_gf: negative m");
    // series[j] = coefficient of t^j, a polynomial in x
    std::vector<LaurentPoly> series(static_cast<size_t>(m + 1));
    series[0] = LaurentPoly(1);
    for (const auto& [k, beta] : pc.terms()) {
        if (k < 0 || beta < 0) throw std::invalid_argument("symmetric_product_gf: pc must have nonnegative data");
        unsigned b = static_cast<unsigned>(beta.get_ui());
        std::vector<LaurentPoly> factor(static_cast<size_t>(m + 1));
        for (int j = 0; j <= m; ++j) {
            // (1 + x^k t)^b for odd k, (1 - x^k t)^{-b} for even k; b >= 1 here
            unsigned jj = static_cast<unsigned>(j);
            Integer a = (k % 2) ? binomial(b, jj) : binomial(b + jj - 1, jj);
            factor[j] = LaurentPoly::monomial(a, k * j);
        }
        std::vector<LaurentPoly> next(static_cast<size_t>(m + 1));
        for (int i = 0; i <= m; ++i) {
            if (series[i].is_zero()) continue;
            for (int j = 0; i + j <= m; ++j) next[i + j] += series[i] * factor[j];
        }
        series = std::move(next);
    }
    return series[m];
}

LaurentPoly poincare_sym_product(const SpaceSpec& x, int m, bool cyclic) {
    if (m < 1) throw std::invalid_argument("poincare_sym_product: m must be >= 1");
    // pc((-1)^{d+1} T^d)
    auto twisted = [&](int d) { return lp_substitute(x.pc, d, d % 2 == 0); };
    LaurentPoly sum;
    Integer order;
    if (cyclic) {
        for (long d : divisors(m)) {
            int dd = static_cast<int>(d);
            sum += twisted(dd).pow(static_cast<unsigned>(m / dd)) * Integer(euler_phi(d));
        }
        order = m;
    } else {
        check_cycle_cap(m, "poincare_sym_product");
        for (const auto& t : partitions(m)) {
            LaurentPoly prod(1);
            for (int d = 1; d <= m; ++d)
                if (t.x(d)) prod *= twisted(d).pow(static_cast<unsigned>(t.x(d)));
            sum += prod * class_size(t);
        }
        order = factorial(static_cast<unsigned>(m));
    }
    LaurentPoly out;
    if (!sum.divide_exact(order, &out))
        throw ConsistencyError("poincare_sym_product: class sum not divisible by " + order.get_str());
    if (!out.nonnegative()) throw ConsistencyError("poincare_sym_product: negative Betti number in " + out.to_string());
    if (!cyclic) {
        LaurentPoly gf = symmetric_product_gf(x.pc, m);
        if (!(gf == out))
            throw ConsistencyError("poincare_sym_product: class average " + out.to_string() +
                                   " disagrees with generating function " + gf.to_string());
    }
    return out;
}

}  // namespace confcohom
