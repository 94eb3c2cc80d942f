#pragma once

// Integer partitions, bipartitions and marked bipartitions, Young-diagram
// exterior corners, and the one-square growth relation on bipartitions.

#include <cstdint>
#include <string>
#include <vector>

namespace hgp {

// Weakly decreasing list of positive integers.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }   // sum of parts
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    bool has_part(int value) const;
    // distinct part values, descending (the order they appear)
    std::vector<int> distinct_parts() const;

    std::string to_string() const;   // "(5,3,3,1,1)", "()" for the empty partition

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// Canonical enumeration order: graded (by size), then reverse-lexicographic
// within a size, so (n) comes first and (1^n) last.
bool operator<(const Partition& a, const Partition& b);

struct Bipartition {
    Partition first;
    Partition second;

    int size() const { return first.size() + second.size(); }
    std::string to_string() const;

    friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

// Canonical order: first.size descending, then first, then second.
bool operator<(const Bipartition& a, const Bipartition& b);

enum class MarkComponent : int { First = 1, Second = 2 };

// A bipartition with one part VALUE of one component distinguished; marking
// either copy of a repeated part gives the same object.
struct MarkedBipartition {
    Bipartition base;
    MarkComponent component = MarkComponent::First;
    int part = 0;

    // Throws std::invalid_argument if the part is absent from the component.
    void validate() const;
    std::string to_string() const;   // e.g. "((3,2,1),(2)^2)"

    friend bool operator==(const MarkedBipartition&, const MarkedBipartition&) = default;
};

// Canonical order: base, then component (First before Second), then part ascending.
bool operator<(const MarkedBipartition& a, const MarkedBipartition& b);

// All partitions of n in canonical order; n=0 yields the single empty partition.
std::vector<Partition> enumerate_partitions(int n);

// All (lambda1 |- k, lambda2 |- n-k) pairs in canonical order.
std::vector<Bipartition> enumerate_bipartitions(int n);

// One marked bipartition per (bipartition of n, component, distinct part value).
std::vector<MarkedBipartition> enumerate_marked_bipartitions(int n);

// 1-based row indices where one square can be added, including the new bottom row.
std::vector<int> exterior_corners(const Partition& p);

// True iff lambda is mu plus one square in some exterior corner.
bool partition_covers(const Partition& mu, const Partition& lambda);

// One component grows by one square, the other is unchanged.
bool covers(const Bipartition& mu, const Bipartition& lambda);

// Multiset union of parts, re-sorted descending.
Partition union_parts(const Partition& a, const Partition& b);

// z_lambda = prod_i i^{m_i} m_i!  (centralizer order of cycle type lambda in S_n)
long long z_factor(const Partition& p);

long long factorial(int n);
long long binomial(int n, int k);

}   // namespace hgp
