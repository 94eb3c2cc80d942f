#pragma once

// The hyperoctahedral group H_n as the subgroup of S_{2n} preserving the
// blocks p_2(i) = {2i-1, 2i}: membership, enumeration, the signed-permutation
// view, the type map (bipartition of n), the marked type (which additionally
// records the cycle carrying the last block), and the resulting H_n- and
// H_{n-1}-conjugacy class partitions.

#include <cstdint>
#include <utility>
#include <vector>

#include "hgp/group_table.hpp"
#include "hgp/partition.hpp"
#include "hgp/permutation.hpp"

namespace hgp {

inline constexpr long long kDefaultMaxGroupOrder = 645120;   // |H_7|

// True iff every block {2i-1,2i} maps onto some block {2j-1,2j}.
bool is_member_h(const Permutation& p);

// 2^n n! elements of [H_n] as permutations of [2n]; n=0 is the trivial group.
GroupTable enumerate_h(int n, long long max_order = kDefaultMaxGroupOrder);

long long h_order(int n);   // 2^n n!

// Block permutation pi of [n] plus per-block flip bits: flips[i] is true iff
// block i+1 maps to block pi(i+1) with its two points swapped.
struct SignedPermutation {
    Permutation block_map;
    std::vector<char> flips;

    int blocks() const { return block_map.degree(); }
    friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
};

SignedPermutation to_signed(const Permutation& w);   // throws on non-members
Permutation from_signed(const SignedPermutation& s);

// Bipartition (lambda1, lambda2) of n: lambda1 collects block-cycle lengths of
// even flip parity (mirror cycle pairs in S_2n), lambda2 those of odd parity
// (self-mirrored cycles).
Bipartition hn_type(const Permutation& w);

// hn_type plus the mark locating the cycle that carries 2n-1 and 2n.
MarkedBipartition hn_marked_type(const Permutation& w);

// H_{n-1} -> H_n embedding fixing the last block pointwise.
Permutation embed_h(const Permutation& w_of_smaller, int n);

// Indices in hn of the embedded H_{n-1} elements, one per hm element.
IndexSet embedded_h_indices(const GroupTable& hn, const GroupTable& hm);

// Fibers of hn_type over an enumerated H_n, keyed by every bipartition of n
// in canonical order; all fibers are nonempty.
std::vector<std::pair<Bipartition, IndexSet>> hn_conjugacy_classes(const GroupTable& hn);

// Fibers of hn_marked_type: the H_{n-1}-conjugacy classes of H_n.
std::vector<std::pair<MarkedBipartition, IndexSet>> hn_relative_classes(const GroupTable& hn);

// 2^n n! / (2^{l(a)+l(b)} z_a z_b)
long long hn_class_size(int n, const Bipartition& type);
long long hn_centralizer_order(int n, const Bipartition& type);

}   // namespace hgp
