#pragma once

// Data-parallel scan kernels over enumerated groups. Each kernel computes a
// per-element value independently, so results are deterministic regardless of
// schedule. The _serial twins are plain loops kept as reference
// implementations; tests assert both agree and hgp_bench times them.

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hgp/group_table.hpp"

namespace hgp {
namespace kernels {

// key[g] = smallest index among { k g k^{-1} : k in K }; equal keys = same
// K-conjugacy class.
std::vector<uint32_t> k_conjugation_keys(const GroupTable& g, const IndexSet& k);
std::vector<uint32_t> k_conjugation_keys_serial(const GroupTable& g, const IndexSet& k);

// key[g] = smallest index in the double coset K g K.
std::vector<uint32_t> double_coset_keys(const GroupTable& g, const IndexSet& k);
std::vector<uint32_t> double_coset_keys_serial(const GroupTable& g, const IndexSet& k);

// out[g] = position in `k` of the first conjugator with k g k^{-1} = g^{-1},
// or -1 when none exists.
std::vector<int32_t> inverse_conjugator_scan(const GroupTable& g, const IndexSet& k);
std::vector<int32_t> inverse_conjugator_scan_serial(const GroupTable& g, const IndexSet& k);

struct CommutativityResult {
    bool commutative = true;
    // lowest failing (part index, part index, element index) when not
    std::optional<std::array<uint32_t, 3>> witness;
    size_t pairs_checked = 0;
};

// Checks that indicator convolution commutes for every pair of parts:
// #{(a,b) in A x B : ab = g} == #{(b,a) in B x A : ba = g} for all g.
CommutativityResult convolution_commutativity(const GroupTable& g,
                                              const std::vector<IndexSet>& parts);
CommutativityResult convolution_commutativity_serial(const GroupTable& g,
                                                     const std::vector<IndexSet>& parts);

}   // namespace kernels
}   // namespace hgp
