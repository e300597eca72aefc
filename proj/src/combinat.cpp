#include "confcohom/combinat.hpp"

#include "confcohom/errors.hpp"
#include "confcohom/limits.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace confcohom {

// ---------------------------------------------------------------- CycleType

CycleType::CycleType(int m, std::vector<int> mult) : m_(m), mult_(std::move(mult)) {
    if (m < 0) throw std::invalid_argument("CycleType: negative size");
    mult_.resize(static_cast<size_t>(m), 0);
    long total = 0;
    for (int d = 1; d <= m; ++d) {
        if (mult_[d - 1] < 0) throw std::invalid_argument("CycleType: negative multiplicity");
        total += static_cast<long>(d) * mult_[d - 1];
    }
    if (total != m) throw std::invalid_argument("CycleType: sum of d*x_d differs from m");
}

CycleType CycleType::identity(int m) {
    std::vector<int> mult(static_cast<size_t>(m), 0);
    if (m > 0) mult[0] = m;
    return CycleType(m, std::move(mult));
}

CycleType CycleType::full_cycle(int m) {
    std::vector<int> mult(static_cast<size_t>(m), 0);
    if (m > 0) mult[m - 1] = 1;
    return CycleType(m, std::move(mult));
}

CycleType CycleType::from_parts(const Partition& parts) {
    int m = 0;
    for (int p : parts) {
        if (p <= 0) throw std::invalid_argument("CycleType: nonpositive part");
        m += p;
    }
    std::vector<int> mult(static_cast<size_t>(m), 0);
    for (int p : parts) ++mult[p - 1];
    return CycleType(m, std::move(mult));
}

CycleType CycleType::parse(const std::string& text, int m) {
    Partition parts;
    std::stringstream ss(text);
    std::string item;
    auto to_int = [&](const std::string& s) {
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
            throw ParseError("invalid cycle type '" + text + "'");
        return std::stoi(s);
    };
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
                   item.end());
        if (item.empty()) continue;
        auto caret = item.find('^');
        int d = to_int(item.substr(0, caret));
        int count = caret == std::string::npos ? 1 : to_int(item.substr(caret + 1));
        if (d == 0) throw ParseError("cycle length 0 in '" + text + "'");
        for (int k = 0; k < count; ++k) parts.push_back(d);
    }
    int total = std::accumulate(parts.begin(), parts.end(), 0);
    if (total != m)
        throw ParseError("cycle type '" + text + "' has size " + std::to_string(total) + ", expected " +
                         std::to_string(m));
    return from_parts(parts);
}

int CycleType::num_cycles() const { return std::accumulate(mult_.begin(), mult_.end(), 0); }

Partition CycleType::parts() const {
    Partition out;
    for (int d = m_; d >= 1; --d)
        for (int k = 0; k < mult_[d - 1]; ++k) out.push_back(d);
    return out;
}

int CycleType::sign() const {
    int transpositions = m_ - num_cycles();
    return transpositions % 2 == 0 ? 1 : -1;
}

std::string CycleType::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int d = 1; d <= m_; ++d) {
        if (mult_[d - 1] == 0) continue;
        if (!first) os << ",";
        first = false;
        os << d << "^" << mult_[d - 1];
    }
    return os.str();
}

// -------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
        if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
            throw std::invalid_argument("Permutation: images are not a bijection");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int m) {
    std::vector<int> im(static_cast<size_t>(m));
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
}

Permutation Permutation::from_cycles(int m, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> im(static_cast<size_t>(m));
    std::iota(im.begin(), im.end(), 0);
    std::vector<char> used(static_cast<size_t>(m), 0);
    for (const auto& c : cycles) {
        for (size_t k = 0; k < c.size(); ++k) {
            int a = c[k] - 1;
            int b = c[(k + 1) % c.size()] - 1;
            if (a < 0 || a >= m || b < 0 || b >= m) throw ParseError("cycle entry out of range 1.." + std::to_string(m));
            if (used[a]) throw ParseError("cycles are not disjoint");
            used[a] = 1;
            im[a] = b;
        }
    }
    return Permutation(std::move(im));
}

Permutation Permutation::parse(const std::string& text, int m) {
    std::vector<std::vector<int>> cycles;
    size_t pos = 0;
    while (pos < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            continue;
        }
        if (text[pos] != '(') throw ParseError("expected '(' in permutation '" + text + "'");
        auto close = text.find(')', pos);
        if (close == std::string::npos) throw ParseError("unbalanced '(' in permutation '" + text + "'");
        std::stringstream inner(text.substr(pos + 1, close - pos - 1));
        std::vector<int> cyc;
        std::string tok;
        while (inner >> tok) {
            tok.erase(std::remove(tok.begin(), tok.end(), ','), tok.end());
            if (tok.empty()) continue;
            try {
                cyc.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw ParseError("bad entry '" + tok + "' in permutation '" + text + "'");
            }
        }
        if (!cyc.empty()) cycles.push_back(std::move(cyc));
        pos = close + 1;
    }
    return from_cycles(m, cycles);
}

Permutation Permutation::representative(const CycleType& type) {
    std::vector<int> im;
    int next = 0;
    for (int d : type.parts()) {
        for (int k = 0; k < d; ++k) im.push_back(next + (k + 1) % d);
        next += d;
    }
    return Permutation(std::move(im));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw std::invalid_argument("Permutation: size mismatch");
    std::vector<int> im(a.images_.size());
    for (size_t i = 0; i < im.size(); ++i) im[i] = a.images_[b.images_[i]];
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (size_t i = 0; i < im.size(); ++i) im[images_[i]] = static_cast<int>(i);
    return Permutation(std::move(im));
}

CycleType Permutation::cycle_type() const {
    int m = size();
    std::vector<int> mult(static_cast<size_t>(m), 0);
    std::vector<char> seen(static_cast<size_t>(m), 0);
    for (int i = 0; i < m; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = images_[j]) {
            seen[j] = 1;
            ++len;
        }
        ++mult[len - 1];
    }
    return CycleType(m, std::move(mult));
}

std::string Permutation::to_string() const {
    std::ostringstream os;
    std::vector<char> seen(images_.size(), 0);
    bool any = false;
    for (int i = 0; i < size(); ++i) {
        if (seen[i] || images_[i] == i) continue;
        os << "(";
        for (int j = i; !seen[j]; j = images_[j]) {
            if (j != i) os << " ";
            os << j + 1;
            seen[j] = 1;
        }
        os << ")";
        any = true;
    }
    if (!any) os << "()";
    return os.str();
}

// --------------------------------------------------------------- partitions

namespace {

void gen_partitions(int remaining, int max_part, Partition& cur, std::vector<CycleType>& out,
                    std::optional<int> length) {
    if (remaining == 0) {
        if (!length || static_cast<int>(cur.size()) == *length) out.push_back(CycleType::from_parts(cur));
        return;
    }
    if (length && static_cast<int>(cur.size()) >= *length) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(remaining - p, p, cur, out, length);
        cur.pop_back();
    }
}

}  // namespace

std::vector<CycleType> partitions(int m, std::optional<int> length) {
    if (m < 0) throw std::invalid_argument("partitions: negative m");
    std::vector<CycleType> out;
    Partition cur;
    gen_partitions(m, m, cur, out, length);
    return out;
}

Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(unsigned n, unsigned k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer class_size(const CycleType& type) {
    Integer den = 1;
    for (int d = 1; d <= type.size(); ++d) {
        int x = type.x(d);
        if (x == 0) continue;
        Integer dp;
        mpz_ui_pow_ui(dp.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(x));
        den *= factorial(static_cast<unsigned>(x)) * dp;
    }
    return factorial(static_cast<unsigned>(type.size())) / den;
}

// ----------------------------------------------------------------- Stirling

namespace {

struct StirlingTables {
    std::shared_mutex mutex;
    std::map<StirlingKind, std::vector<std::vector<Integer>>> rows;
};

StirlingTables& stirling_tables() {
    static StirlingTables t;
    return t;
}

void extend_rows(StirlingKind kind, std::vector<std::vector<Integer>>& rows, int n) {
    if (rows.empty()) rows.push_back({Integer(1)});
    while (static_cast<int>(rows.size()) <= n) {
        int i = static_cast<int>(rows.size());
        const auto& prev = rows.back();
        std::vector<Integer> row(static_cast<size_t>(i + 1), 0);
        for (int j = 1; j <= i; ++j) {
            Integer left = prev[j - 1];
            Integer same = j < i ? prev[j] : Integer(0);
            switch (kind) {
                case StirlingKind::first_signed: row[j] = left - (i - 1) * same; break;
                case StirlingKind::first_unsigned: row[j] = left + (i - 1) * same; break;
                case StirlingKind::second: row[j] = left + j * same; break;
            }
        }
        rows.push_back(std::move(row));
    }
}

}  // namespace

Integer stirling(StirlingKind kind, int i, int j) {
    if (i < 0 || j < 0 || j > i) return 0;
    auto& t = stirling_tables();
    {
        std::shared_lock lock(t.mutex);
        auto it = t.rows.find(kind);
        if (it != t.rows.end() && static_cast<int>(it->second.size()) > i) return it->second[i][j];
    }
    std::unique_lock lock(t.mutex);
    auto& rows = t.rows[kind];
    extend_rows(kind, rows, i);
    return rows[i][j];
}

Integer stirling2_explicit(int i, int j) {
    if (i < 0 || j < 0) return 0;
    Integer sum = 0;
    for (int k = 0; k <= j; ++k) {
        Integer kp;
        mpz_ui_pow_ui(kp.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(i));
        Integer term = binomial(static_cast<unsigned>(j), static_cast<unsigned>(k)) * kp;
        if ((j - k) % 2) sum -= term;
        else sum += term;
    }
    return sum / factorial(static_cast<unsigned>(j));
}

// ------------------------------------------------------------ number theory

std::vector<long> divisors(long n) {
    if (n < 1) throw std::invalid_argument("divisors: n must be >= 1");
    std::vector<long> lo, hi;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        lo.push_back(d);
        if (d != n / d) hi.push_back(n / d);
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

int mobius(long n) {
    if (n < 1) throw std::invalid_argument("mobius: n must be >= 1");
    int mu = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

long euler_phi(long n) {
    if (n < 1) throw std::invalid_argument("euler_phi: n must be >= 1");
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

NumberTheory number_theory(long n) { return {mobius(n), euler_phi(n), divisors(n)}; }

// ----------------------------------------------------------- set partitions

std::string SetPartition::to_string() const {
    std::ostringstream os;
    for (size_t b = 0; b < blocks.size(); ++b) {
        if (b) os << "|";
        for (int v : blocks[b]) {
            if (m >= 10 && v != blocks[b].front()) os << ",";
            os << v;
        }
    }
    return os.str();
}

namespace {

SetPartition from_rgs(const std::vector<int>& rgs, int nblocks) {
    SetPartition p;
    p.m = static_cast<int>(rgs.size());
    p.blocks.resize(static_cast<size_t>(nblocks));
    for (size_t i = 0; i < rgs.size(); ++i) p.blocks[rgs[i]].push_back(static_cast<int>(i) + 1);
    return p;
}

// Restricted-growth-string enumeration. When alpha is given, only partitions
// whose block relation is alpha-invariant survive (pruned as points are placed).
template <class Visit>
void enumerate_rgs(int m, int l, const Permutation* alpha, Visit&& visit) {
    std::vector<int> rgs(static_cast<size_t>(m), -1);
    auto consistent = [&](int k) {
        if (!alpha) return true;
        const auto& a = alpha->images();
        for (int u = 0; u <= k; ++u) {
            int au = a[u];
            if (au > k) continue;
            for (int v = 0; v < u; ++v) {
                int av = a[v];
                if (av > k) continue;
                if (u != k && v != k && au != k && av != k) continue;
                if ((rgs[u] == rgs[v]) != (rgs[au] == rgs[av])) return false;
            }
        }
        return true;
    };
    auto rec = [&](auto&& self, int k, int used) -> void {
        if (used + (m - k) < l) return;
        if (k == m) {
            if (used == l) visit(rgs, used);
            return;
        }
        int top = std::min(used, l - 1);
        for (int b = 0; b <= top; ++b) {
            rgs[k] = b;
            if (consistent(k)) self(self, k + 1, std::max(used, b + 1));
        }
        rgs[k] = -1;
    };
    rec(rec, 0, 0);
}

}  // namespace

std::vector<SetPartition> set_partitions(int m, int l) {
    if (m < 0 || l < 0) throw std::invalid_argument("set_partitions: negative argument");
    if (m > limits().max_set_partition_m)
        throw CostCapExceeded("set_partitions: m=" + std::to_string(m) + " exceeds cap " +
                              std::to_string(limits().max_set_partition_m));
    std::vector<SetPartition> out;
    if (l > m) return out;
    if (m == 0) {
        if (l == 0) out.push_back(SetPartition{});
        return out;
    }
    enumerate_rgs(m, l, nullptr, [&](const std::vector<int>& rgs, int n) { out.push_back(from_rgs(rgs, n)); });
    return out;
}

std::vector<FixedPartition> fixed_partitions(const Permutation& alpha, int l) {
    int m = alpha.size();
    if (m > limits().max_set_partition_m)
        throw CostCapExceeded("fixed_partitions: m=" + std::to_string(m) + " exceeds cap");
    std::vector<FixedPartition> out;
    if (l < 1 || l > m) return out;
    enumerate_rgs(m, l, &alpha, [&](const std::vector<int>& rgs, int n) {
        SetPartition p = from_rgs(rgs, n);
        // rgs labels are already ordered by least element.
        std::vector<int> beta(static_cast<size_t>(n));
        for (int b = 0; b < n; ++b) beta[b] = rgs[alpha(p.blocks[b].front() - 1)];
        out.push_back({std::move(p), Permutation(std::move(beta))});
    });
    return out;
}

const std::map<CycleType, long>& stable_partition_types(const CycleType& type, int l) {
    static std::shared_mutex mutex;
    static std::map<std::pair<CycleType, int>, std::map<CycleType, long>> memo;
    auto key = std::make_pair(type, l);
    {
        std::shared_lock lock(mutex);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    std::map<CycleType, long> counts;
    int m = type.size();
    if (m > limits().max_set_partition_m)
        throw CostCapExceeded("stable_partition_types: m=" + std::to_string(m) + " exceeds cap");
    if (l >= 1 && l <= m) {
        Permutation alpha = Permutation::representative(type);
        enumerate_rgs(m, l, &alpha, [&](const std::vector<int>& rgs, int n) {
            std::vector<int> first(static_cast<size_t>(n), -1);
            for (int i = 0; i < m; ++i)
                if (first[rgs[i]] < 0) first[rgs[i]] = i;
            std::vector<int> beta(static_cast<size_t>(n));
            for (int b = 0; b < n; ++b) beta[b] = rgs[alpha(first[b])];
            ++counts[Permutation(std::move(beta)).cycle_type()];
        });
    }
    std::unique_lock lock(mutex);
    return memo.try_emplace(key, std::move(counts)).first->second;
}

// ---------------------------------------------------------------- subgroups

namespace {

using Packed = unsigned long long;

Packed pack(const std::vector<int>& im) {
    Packed p = 0;
    for (size_t i = 0; i < im.size(); ++i) p |= static_cast<Packed>(im[i]) << (4 * i);
    return p;
}

std::vector<int> unpack(Packed p, int m) {
    std::vector<int> im(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) im[i] = static_cast<int>((p >> (4 * i)) & 0xF);
    return im;
}

}  // namespace

SubgroupClasses subgroup_closure(const std::vector<Permutation>& generators, int m, long long cap) {
    if (m < 1) throw std::invalid_argument("subgroup_closure: m must be >= 1");
    if (m > 16) throw CostCapExceeded("subgroup_closure: m > 16 not supported");
    if (cap < 0) cap = limits().max_closure;
    for (const auto& g : generators)
        if (g.size() != m) throw std::invalid_argument("subgroup_closure: generator not in S_" + std::to_string(m));

    std::unordered_set<Packed> seen;
    std::deque<Packed> queue;
    Packed id = pack(Permutation::identity(m).images());
    seen.insert(id);
    queue.push_back(id);
    SubgroupClasses out;
    out.m = m;
    while (!queue.empty()) {
        Permutation cur(unpack(queue.front(), m));
        queue.pop_front();
        out.counts[cur.cycle_type()] += 1;
        for (const auto& g : generators) {
            Packed next = pack((g * cur).images());
            if (seen.insert(next).second) {
                if (static_cast<long long>(seen.size()) > cap)
                    throw CostCapExceeded("subgroup_closure: group order exceeds cap " + std::to_string(cap));
                queue.push_back(next);
            }
        }
    }
    out.order = static_cast<unsigned long>(seen.size());
    return out;
}

SubgroupClasses cyclic_subgroup(int m) {
    // sigma^r has type (d^{m/d}) with d = m / gcd(m, r); phi(d) powers per d.
    SubgroupClasses out;
    out.m = m;
    out.order = m;
    for (long d : divisors(m)) {
        std::vector<int> mult(static_cast<size_t>(m), 0);
        mult[d - 1] = static_cast<int>(m / d);
        out.counts[CycleType(m, std::move(mult))] += euler_phi(d);
    }
    return out;
}

SubgroupClasses full_symmetric(int m) {
    SubgroupClasses out;
    out.m = m;
    out.order = factorial(static_cast<unsigned>(m));
    for (const auto& t : partitions(m)) out.counts[t] = class_size(t);
    return out;
}

}  // namespace confcohom
