#pragma once

// An explicitly enumerated permutation group with element indexing. Elements
// are stored sorted in one-line lexicographic order, so index 0 is the
// identity. Degree is capped at 16 so one-line forms pack into a uint64 key.

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hgp/permutation.hpp"

namespace hgp {

class GroupTable {
public:
    GroupTable() = default;
    // Sorts and dedupes; all elements must share one degree <= 16.
    static GroupTable from_elements(std::vector<Permutation> elements);

    int degree() const { return degree_; }
    size_t order() const { return elements_.size(); }
    const Permutation& element(uint32_t i) const { return elements_[i]; }
    const std::vector<Permutation>& elements() const { return elements_; }

    std::optional<uint32_t> find(const Permutation& p) const;
    std::optional<uint32_t> find_packed(uint64_t key) const;
    uint32_t index_of(const Permutation& p) const;   // throws std::out_of_range
    bool contains(const Permutation& p) const { return find(p).has_value(); }

    uint32_t identity_index() const { return identity_; }
    uint32_t inverse_index(uint32_t i) const { return inverses_[i]; }
    uint32_t mul(uint32_t a, uint32_t b) const;   // index of element(a) o element(b)

    // O(|G|^2) closure check; intended for tests and subgroup validation.
    bool is_closed() const;

private:
    int degree_ = 0;
    std::vector<Permutation> elements_;
    std::unordered_map<uint64_t, uint32_t> index_;
    std::vector<uint32_t> inverses_;
    uint32_t identity_ = 0;
};

// Indices in `g` forming a subgroup, sorted ascending.
using IndexSet = std::vector<uint32_t>;

// Throws std::invalid_argument unless the indices form a subgroup of g.
void require_subgroup(const GroupTable& g, const IndexSet& k);

// a acting on points 1..deg(a), b shifted to points deg(a)+1..deg(a)+deg(b).
Permutation disjoint_union(const Permutation& a, const Permutation& b);

// All pairwise disjoint unions; order |A|*|B|.
GroupTable direct_product(const GroupTable& a, const GroupTable& b);

}   // namespace hgp
