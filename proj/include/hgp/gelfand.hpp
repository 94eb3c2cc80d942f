#pragma once

// Group-agnostic Gelfand-pair machinery: double cosets, K-conjugacy classes,
// the symmetry criteria (g^{-1} in KgK, and K-conjugacy of g with g^{-1}
// which decides (G x K, diag K) without materializing the product), the
// double-coset-algebra commutativity test, and the Phi isomorphism onto the
// K-class functions.

#include <optional>
#include <vector>

#include "hgp/class_function.hpp"
#include "hgp/group_table.hpp"
#include "hgp/rational.hpp"

namespace hgp {

// Partition of G into sets KxK, ordered by smallest element index.
std::vector<IndexSet> double_cosets(const GroupTable& g, const IndexSet& k);

// Orbit partition of G under conjugation by K, ordered by smallest element.
std::vector<IndexSet> k_conjugacy_classes(const GroupTable& g, const IndexSet& k);

struct PairCheck {
    bool holds = true;
    std::optional<uint32_t> witness;   // a failing element index
};

// g^{-1} in K g K for every g.
PairCheck is_symmetric_pair(const GroupTable& g, const IndexSet& k);

// Some k in K conjugates g to g^{-1}, for every g; decides whether
// (G x K, diag K) is a symmetric Gelfand pair.
PairCheck is_diag_symmetric_gelfand(const GroupTable& g, const IndexSet& k);

struct GelfandReport {
    bool commutative = true;
    size_t num_double_cosets = 0;
    std::optional<uint32_t> witness;   // element where two structure constants differ
};

// Convolution commutativity on the double-coset indicator basis via structure
// constants. Throws when |G|^2 exceeds the budget.
GelfandReport is_gelfand_via_commutativity(const GroupTable& g, const IndexSet& k,
                                           long long budget = 100'000'000);

// F on G x K constant on diag(K) double cosets, represented by its
// restriction F(., 1); the reconstruction rule is F(g, k) = F(g k^{-1}, 1).
struct DiagBiInvariant {
    std::vector<Rat> on_g;   // one value per element of G

    // evaluate F(g, k): needs the embedded index of k^{-1} composed on the right
    Rat eval(const GroupTable& g, uint32_t g_index, uint32_t k_index_in_g) const {
        return on_g[g.mul(g_index, g.inverse_index(k_index_in_g))];
    }
};

// [Phi(F)](g) = |K| F(g, 1); validates that F(., 1) is constant on the
// K-conjugacy classes (equivalent to double-coset constancy of F).
ClassFunction phi_map(const GroupTable& g, const IndexSet& k, const DiagBiInvariant& f);

}   // namespace hgp
