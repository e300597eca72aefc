#pragma once

#include "confcohom/laurent.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace confcohom {

/// Integer partition as a decreasing list of positive parts (Young diagram rows).
using Partition = std::vector<int>;

/// Partition of m stored as multiplicities (x_1, ..., x_m). Labels conjugacy
/// classes of S_m.
class CycleType {
public:
    CycleType() = default;
    /// mult[d-1] = number of d-cycles. Throws std::invalid_argument if sum d*x_d != m.
    CycleType(int m, std::vector<int> mult);

    static CycleType identity(int m);
    static CycleType full_cycle(int m);
    static CycleType from_parts(const Partition& parts);
    /// Parses "1^2,3^1" or "1,1,3" (empty string means m = 0). Throws ParseError.
    static CycleType parse(const std::string& text, int m);

    int size() const { return m_; }
    int x(int d) const { return d >= 1 && d <= m_ ? mult_[d - 1] : 0; }
    const std::vector<int>& mult() const { return mult_; }
    int num_cycles() const;
    Partition parts() const;
    /// Sign of any permutation of this type.
    int sign() const;
    bool is_identity() const { return x(1) == m_; }
    std::string to_string() const;

    friend auto operator<=>(const CycleType&, const CycleType&) = default;

private:
    int m_ = 0;
    std::vector<int> mult_;
};

/// A permutation of {0, ..., m-1}; textual forms use 1-based cycle notation.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int m);
    /// Cycles given 1-based, e.g. {{1,2,3}}.
    static Permutation from_cycles(int m, const std::vector<std::vector<int>>& cycles);
    /// "(1 2 3)(4 5)" or "()" for the identity. Throws ParseError.
    static Permutation parse(const std::string& text, int m);
    /// Canonical element of a class: consecutive cycles, longest first.
    static Permutation representative(const CycleType& type);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i]; }
    const std::vector<int>& images() const { return images_; }

    /// (a * b)(i) = a(b(i)).
    friend Permutation operator*(const Permutation& a, const Permutation& b);
    Permutation inverse() const;
    CycleType cycle_type() const;
    std::string to_string() const;

    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

/// All partitions of m (optionally with exactly `length` parts), in reverse
/// lexicographic order of their decreasing parts: (3), (2,1), (1,1,1).
std::vector<CycleType> partitions(int m, std::optional<int> length = std::nullopt);

/// h_lambda = m! / prod_d (x_d! d^{x_d}).
Integer class_size(const CycleType& type);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

enum class StirlingKind { first_signed, first_unsigned, second };

/// Memoized recurrence values; 0 outside the triangle. Thread-safe.
Integer stirling(StirlingKind kind, int i, int j);

/// (1/j!) sum_k (-1)^{j-k} C(j,k) k^i, computed independently of the recurrence.
Integer stirling2_explicit(int i, int j);

struct NumberTheory {
    int mobius;
    long phi;
    std::vector<long> divisors;
};

/// Throws std::invalid_argument for n < 1.
NumberTheory number_theory(long n);
int mobius(long n);
long euler_phi(long n);
std::vector<long> divisors(long n);

/// Partition of {1..m} into blocks; blocks sorted, ordered by least element.
struct SetPartition {
    int m = 0;
    std::vector<std::vector<int>> blocks;

    int num_blocks() const { return static_cast<int>(blocks.size()); }
    std::string to_string() const;  // "12|3"
    friend auto operator<=>(const SetPartition&, const SetPartition&) = default;
};

/// All partitions of {1..m} into exactly l blocks (restricted growth strings).
/// Throws CostCapExceeded for m above the set-partition cap.
std::vector<SetPartition> set_partitions(int m, int l);

struct FixedPartition {
    SetPartition partition;
    Permutation block_action;  // beta(alpha, p) on blocks indexed by least element
};

/// Partitions into l blocks stabilised by alpha, with the induced block permutation.
std::vector<FixedPartition> fixed_partitions(const Permutation& alpha, int l);

/// For the class representative of `type`: number of alpha-stable l-block
/// partitions, grouped by the cycle type of the induced block permutation.
/// Memoized; equals the grouping of fixed_partitions(representative, l).
const std::map<CycleType, long>& stable_partition_types(const CycleType& type, int l);

struct SubgroupClasses {
    int m = 0;
    Integer order;
    std::map<CycleType, Integer> counts;
};

/// Breadth-first closure of the generated subgroup of S_m, summarised by
/// cycle-type counts. Throws CostCapExceeded past `cap` elements.
SubgroupClasses subgroup_closure(const std::vector<Permutation>& generators, int m,
                                 long long cap = -1);

/// Cyclic group generated by the m-cycle, summarised without enumeration.
SubgroupClasses cyclic_subgroup(int m);
/// The full symmetric group S_m as class counts.
SubgroupClasses full_symmetric(int m);

}  // namespace confcohom
