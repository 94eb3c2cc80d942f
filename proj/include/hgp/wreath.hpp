#pragma once

// S_k wr S_n realized inside S_{kn} as the permutations sending each block
// p_k(i) = {(i-1)k+1, ..., ik} onto some block, plus the conjugacy witness
// search showing that for k=3 an element need not be conjugate to its inverse
// by the copy of S_k wr S_{n-1} supported on the first k(n-1) points.

#include <string>
#include <vector>

#include "hgp/group_table.hpp"
#include "hgp/hyperoctahedral.hpp"
#include "hgp/permutation.hpp"

namespace hgp {

struct WreathGroupSpec {
    int k = 1;   // block size
    int n = 0;   // block count

    int degree() const { return k * n; }
    long long order() const;   // (k!)^n n!
};

bool is_member_wreath(const WreathGroupSpec& spec, const Permutation& p);

GroupTable enumerate_wreath(const WreathGroupSpec& spec,
                            long long max_order = kDefaultMaxGroupOrder);

// Members fixing the last block pointwise, i.e. S_k wr S_{n-1} on [k(n-1)].
IndexSet wreath_point_stabilizer_indices(const WreathGroupSpec& spec, const GroupTable& table);

struct WreathWitnessReport {
    WreathGroupSpec spec;
    Permutation omega;
    bool conjugate_to_inverse = false;
    Permutation conjugator;   // meaningful only when conjugate_to_inverse
    size_t searched = 0;
};

// Searches the embedded S_k wr S_{n-1} for a conjugator from omega to its
// inverse; omega defaults to a k-cycle on the last block (the k=3, n=2 case
// is the counterexample).
WreathWitnessReport wreath_counterexample_check(int k = 3, int n = 2);
WreathWitnessReport wreath_conjugacy_check(const WreathGroupSpec& spec, const Permutation& omega);

}   // namespace hgp
