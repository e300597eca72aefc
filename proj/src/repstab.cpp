#include "confcohom/repstab.hpp"

#include "confcohom/errors.hpp"
#include "confcohom/limits.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

namespace confcohom {

Partition PaddedPartition::padded() const {
    int size = std::accumulate(core.begin(), core.end(), 0);
    int first = core.empty() ? 0 : core.front();
    if (m - size < first)
        throw std::invalid_argument("PaddedPartition: m=" + std::to_string(m) + " too small for core " +
                                    partition_to_string(core));
    Partition out{m - size};
    out.insert(out.end(), core.begin(), core.end());
    if (out.front() == 0) out.clear();  // m = 0, empty core
    return out;
}

PaddedPartition PaddedPartition::unpad(const Partition& full) {
    PaddedPartition p;
    p.m = std::accumulate(full.begin(), full.end(), 0);
    if (!full.empty()) p.core.assign(full.begin() + 1, full.end());
    return p;
}

std::string partition_to_string(const Partition& p) {
    std::ostringstream os;
    os << "(";
    for (size_t k = 0; k < p.size(); ++k) os << (k ? "," : "") << p[k];
    os << ")";
    return os.str();
}

// ------------------------------------------------------- Murnaghan-Nakayama

namespace {

long long mn_rec(const Partition& lambda, const Partition& mu,
                 std::map<std::pair<Partition, Partition>, long long>& memo) {
    if (mu.empty()) return lambda.empty() ? 1 : 0;
    auto key = std::make_pair(lambda, mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    int r = mu.front();
    Partition rest(mu.begin() + 1, mu.end());
    int n = static_cast<int>(lambda.size());
    std::vector<int> beads(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) beads[i] = lambda[i] + (n - 1 - i);
    std::set<int> occupied(beads.begin(), beads.end());

    long long total = 0;
    for (int i = 0; i < n; ++i) {
        int from = beads[i];
        int to = from - r;
        if (to < 0 || occupied.count(to)) continue;
        // leg length = beads strictly between the two positions
        auto between = std::distance(occupied.upper_bound(to), occupied.lower_bound(from));
        std::vector<int> moved = beads;
        moved[i] = to;
        std::sort(moved.rbegin(), moved.rend());
        Partition smaller;
        for (int k = 0; k < n; ++k) {
            int part = moved[k] - (n - 1 - k);
            if (part > 0) smaller.push_back(part);
        }
        long long v = mn_rec(smaller, rest, memo);
        total += (between % 2) ? -v : v;
    }
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

long long mn_character(const Partition& lambda, const CycleType& mu) {
    int size = std::accumulate(lambda.begin(), lambda.end(), 0);
    if (size != mu.size())
        throw std::invalid_argument("mn_character: |lambda|=" + std::to_string(size) + " differs from |mu|=" +
                                    std::to_string(mu.size()));
    if (!std::is_sorted(lambda.rbegin(), lambda.rend()) ||
        std::any_of(lambda.begin(), lambda.end(), [](int p) { return p <= 0; }))
        throw std::invalid_argument("mn_character: lambda is not a partition");
    if (size > limits().max_cycle_m) throw CostCapExceeded("mn_character: m exceeds cap");

    static std::shared_mutex mutex;
    static std::map<std::pair<Partition, Partition>, long long> memo;
    Partition mu_parts = mu.parts();
    {
        std::shared_lock lock(mutex);
        if (auto it = memo.find({lambda, mu_parts}); it != memo.end()) return it->second;
    }
    std::unique_lock lock(mutex);
    return mn_rec(lambda, mu_parts, memo);
}

Integer irrep_dimension(const Partition& lambda) {
    int size = std::accumulate(lambda.begin(), lambda.end(), 0);
    Integer hooks = 1;
    for (size_t r = 0; r < lambda.size(); ++r) {
        for (int c = 0; c < lambda[r]; ++c) {
            int arm = lambda[r] - c - 1;
            int leg = 0;
            for (size_t k = r + 1; k < lambda.size() && lambda[k] > c; ++k) ++leg;
            hooks *= arm + leg + 1;
        }
    }
    return factorial(static_cast<unsigned>(size)) / hooks;
}

// --------------------------------------------------------------- decompose

std::map<Partition, Integer> decompose(const ClassSeries& series, int degree) {
    int m = series.m();
    if (m > limits().max_cycle_m) throw CostCapExceeded("decompose: m exceeds cap");
    std::vector<std::pair<CycleType, Integer>> weighted;  // (class, h * chi(class; i))
    bool any = false;
    for (const auto& [type, poly] : series.values()) {
        Integer c = poly.coeff(degree);
        if (degree % 2) c = -c;
        if (c != 0) any = true;
        weighted.emplace_back(type, c * class_size(type));
    }
    std::map<Partition, Integer> out;
    if (!any) return out;
    Integer order = factorial(static_cast<unsigned>(m));
    for (const auto& lam : partitions(m)) {
        Partition irrep = lam.parts();
        Integer sum = 0;
        for (const auto& [type, w] : weighted)
            if (w != 0) sum += w * Integer(static_cast<long>(mn_character(irrep, type)));
        if (!mpz_divisible_p(sum.get_mpz_t(), order.get_mpz_t()))
            throw ConsistencyError("decompose: non-integral multiplicity for " + partition_to_string(irrep) +
                                   " in degree " + std::to_string(degree));
        Integer mult = sum / order;
        if (mult < 0)
            throw ConsistencyError("decompose: negative multiplicity for " + partition_to_string(irrep) +
                                   " in degree " + std::to_string(degree));
        if (mult != 0) out.emplace(PaddedPartition::unpad(irrep).core, mult);
    }
    return out;
}

ClassSeries bm_series(const ClassSeries& series, int space_dim) {
    int m = series.m();
    int top = m * space_dim;
    ClassSeries out(m);
    for (const auto& [type, poly] : series.values()) {
        // alpha^{-1} has the same cycle type as alpha.
        LaurentPoly v = lp_dual(poly, top);
        bool negate = (top % 2 != 0);
        if (space_dim % 2 && type.sign() < 0) negate = !negate;
        out.set(type, negate ? -v : v);
    }
    return out;
}

ClassSeries bm_series_Delta(const SpaceSpec& x, int m, int a) {
    int l = m - a;
    if (l < 1) throw std::invalid_argument("bm_series_Delta: need m - a >= 1");
    return induce_I(bm_series(series_Fm(x, l), x.dim), m);
}

// --------------------------------------------------------------- stability

Integer StabilityReport::multiplicity(const Partition& core, int m) const {
    auto row = table.find(core);
    if (row == table.end()) return 0;
    auto it = row->second.find(m);
    return it == row->second.end() ? Integer(0) : it->second;
}

bool StabilityReport::all_passed() const {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.passed(); });
}

bool BfReport::all_passed() const {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.passed(); });
}

namespace {

std::string window(int lo, int hi) { return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]"; }

// Lowest k whose k-th finite differences vanish at >= `needed` points.
Verdict polynomial_verdict(const std::map<int, Integer>& values, int from, int needed) {
    std::vector<Integer> seq;
    int lo = -1, hi = -1;
    for (const auto& [m, v] : values) {
        if (m < from) continue;
        if (lo < 0) lo = m;
        hi = m;
        seq.push_back(v);
    }
    Verdict v{"betti_polynomial", VerdictStatus::undetermined, ""};
    if (seq.empty()) {
        v.detail = "no data at or above " + std::to_string(from);
        return v;
    }
    for (int k = 0; static_cast<int>(seq.size()) - k >= needed; ++k) {
        if (std::all_of(seq.begin(), seq.end(), [](const Integer& z) { return z == 0; })) {
            v.status = VerdictStatus::pass;
            v.detail = "differences of order " + std::to_string(k) + " vanish on " + window(lo, hi) +
                       (k ? "; polynomial of degree " + std::to_string(k - 1) : "; identically zero");
            return v;
        }
        for (size_t j = 0; j + 1 < seq.size(); ++j) seq[j] = seq[j + 1] - seq[j];
        seq.pop_back();
    }
    v.detail = "window " + window(lo, hi) + " too short to detect the degree";
    return v;
}

}  // namespace

StabilityReport stability_report(const SpaceSpec& x, int degree, int a, int m_first, int m_last,
                                 const StabilityOptions& options) {
    require_i_acyclic(x, "stability_report");
    require_orientable(x, "stability_report");
    if (!x.connected)
        throw HypothesisViolation("connected", "stability_report: space '" + x.name + "' is not flagged connected");
    if (x.dim < 2)
        throw HypothesisViolation("dim", "stability_report: space '" + x.name + "' has dimension < 2");
    if (degree < 0 || a < 0) throw std::invalid_argument("stability_report: negative degree or a");

    StabilityReport r;
    r.degree = degree;
    r.a = a;
    r.m_first = std::max(m_first, a + 1);
    r.m_last = m_last;
    r.monotone_bound = degree + a;
    r.stable_bound = (x.dim == 2 ? 4 * degree : 2 * degree) + 4 * a;
    if (r.m_first > r.m_last) throw std::invalid_argument("stability_report: empty m range");
    if (r.m_last > limits().max_cycle_m) throw CostCapExceeded("stability_report: m exceeds cap");

    for (int m = r.m_first; m <= r.m_last; ++m) {
        ClassSeries bm = bm_series_Delta(x, m, a);
        for (const auto& [core, mult] : decompose(bm, degree)) r.table[core][m] = mult;
        Integer b = bm.at(CycleType::identity(m)).coeff(degree);
        r.betti[m] = degree % 2 ? Integer(-b) : b;
    }

    auto check_rows = [&](int from, bool constant, const std::string& name) {
        Verdict v{name, VerdictStatus::pass, ""};
        int lo = std::max(from, r.m_first);
        if (lo >= r.m_last) {
            v.status = VerdictStatus::undetermined;
            v.detail = "window " + window(lo, r.m_last) + " has fewer than two points";
            return v;
        }
        for (const auto& [core, row] : r.table) {
            for (int m = lo; m < r.m_last; ++m) {
                Integer now = r.multiplicity(core, m), next = r.multiplicity(core, m + 1);
                bool ok = constant ? now == next : now <= next;
                if (!ok) {
                    v.status = VerdictStatus::fail;
                    v.detail = partition_to_string(core) + ": " + now.get_str() + " at m=" + std::to_string(m) +
                               ", " + next.get_str() + " at m=" + std::to_string(m + 1);
                    return v;
                }
            }
        }
        v.detail = std::string(constant ? "constant" : "nondecreasing") + " on " + window(lo, r.m_last);
        return v;
    };
    r.verdicts.push_back(check_rows(r.monotone_bound, false, "monotone"));
    r.verdicts.push_back(check_rows(r.stable_bound, true, "stable"));
    r.verdicts.push_back(polynomial_verdict(r.betti, r.stable_bound, options.poly_window));
    return r;
}

Integer betti_bm_BF(const SpaceSpec& x, int m, int degree) {
    ClassSeries bm = bm_series(series_Fm(x, m), x.dim);
    Integer sum = 0;
    for (const auto& [type, poly] : bm.values()) sum += poly.coeff(degree) * class_size(type);
    Integer order = factorial(static_cast<unsigned>(m));
    if (!mpz_divisible_p(sum.get_mpz_t(), order.get_mpz_t()))
        throw ConsistencyError("betti_bm_BF: average not integral");
    Integer b = sum / order;
    if (degree % 2) b = -b;
    if (b < 0) throw ConsistencyError("betti_bm_BF: negative Betti number");
    return b;
}

BfReport bf_constancy(const SpaceSpec& x, int degree, int m_first, int m_last) {
    require_i_acyclic(x, "bf_constancy");
    require_orientable(x, "bf_constancy");
    Integer top = x.pc.coeff(x.dim);
    if (top > 1)
        throw HypothesisViolation("top_betti", "bf_constancy: dim H_c^" + std::to_string(x.dim) + " of '" + x.name +
                                                   "' exceeds 1");
    m_first = std::max(m_first, 1);
    if (m_first > m_last) throw std::invalid_argument("bf_constancy: empty m range");

    BfReport r;
    r.degree = degree;
    for (int m = m_first; m <= m_last; ++m) r.betti[m] = betti_bm_BF(x, m, degree);
    r.constant_from = m_last;
    for (int m = m_last - 1; m >= m_first && r.betti[m] == r.betti[m_last]; --m) r.constant_from = m;

    auto constant_on = [&](const std::string& name, int from) {
        Verdict v{name, VerdictStatus::pass, ""};
        int lo = std::max(from, m_first);
        if (lo >= m_last) {
            v.status = VerdictStatus::undetermined;
            v.detail = "window " + window(lo, m_last) + " has fewer than two points";
            return v;
        }
        if (r.constant_from > lo) v.status = VerdictStatus::fail;
        v.detail = "tail constant from m=" + std::to_string(r.constant_from) + ", expected from " + std::to_string(lo);
        return v;
    };
    r.verdicts.push_back(constant_on("constant_from_i", degree));
    int d = x.dim;
    if (d == 1) r.verdicts.push_back(constant_on("constant_from_1", 1));
    if (d == 2) {
        r.verdicts.push_back(constant_on("constant_from_2i", 2 * degree));
        if (top == 0) {
            Verdict v{"zero_above_i", VerdictStatus::pass, "Betti vanishes for m > " + std::to_string(degree)};
            for (const auto& [m, b] : r.betti)
                if (m > degree && b != 0) {
                    v.status = VerdictStatus::fail;
                    v.detail = "Betti " + b.get_str() + " at m=" + std::to_string(m);
                }
            r.verdicts.push_back(v);
        }
    }
    if (d >= 3 && top == 0) r.verdicts.push_back(constant_on("constant_from_i_over_d-1", (degree + d - 2) / (d - 1)));
    return r;
}

}  // namespace confcohom
