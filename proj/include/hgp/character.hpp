#pragma once

// Exact integer character tables: S_n via the Murnaghan-Nakayama rim-hook
// rule and H_n rows induced from H_k x H_{n-k}. Row (lambda, mu) with
// k = |lambda| is Ind of (chi^lambda o forget) (x) ((chi^mu o forget) . delta),
// where forget drops the flip data onto the block permutation (an element of
// class (alpha, beta) has underlying cycle type alpha U beta) and delta is the
// linear character (-1)^{l(beta)}. This pins the labeling: chi^{((n),0)} is
// trivial and chi^{(0,(n))} is delta.

#include <vector>

#include "hgp/partition.hpp"
#include "hgp/rational.hpp"

namespace hgp {

// chi^lambda at cycle type mu, by rim-hook removal with memoization.
long long sym_character(const Partition& lambda, const Partition& mu);

// chi^lambda(1), the number of standard Young tableaux.
long long sym_degree(const Partition& lambda);

struct SnCharacterTable {
    int n = 0;
    std::vector<Partition> labels;   // rows and columns, canonical order
    std::vector<std::vector<long long>> entries;
    std::vector<long long> class_sizes;
    std::vector<long long> centralizer_orders;

    int index_of(const Partition& p) const;
    long long value(int row, int col) const { return entries[row][col]; }
    long long degree(int row) const;   // value at the identity class (1^n)
};

SnCharacterTable sn_character_table(int n);

struct HnCharacterTable {
    int n = 0;
    std::vector<Bipartition> labels;   // rows and columns, canonical order
    std::vector<std::vector<long long>> entries;
    std::vector<long long> class_sizes;
    std::vector<long long> centralizer_orders;

    int index_of(const Bipartition& b) const;
    long long value(int row, int col) const { return entries[row][col]; }
    long long degree(int row) const;   // value at class ((1^n), 0)
    size_t size() const { return labels.size(); }
};

HnCharacterTable hn_character_table(int n);

// Fusion of an H_k x H_{n-k} product class into H_n: multiset union in each
// component.
Bipartition fuse_classes(const Bipartition& a, const Bipartition& b);

// Class map of the embedding H_{n-1} -> H_n: append a fixed positive block.
Bipartition embed_class(const Bipartition& type_of_smaller);

// Ind_H^G chi(C) = (|G| / (|H| |C|)) sum_{D -> C} |D| chi(D), with H-classes
// described by their sizes and a fusion map into G-class indices.
std::vector<Rat> induce_character(const std::vector<Rat>& chi_on_h,
                                  const std::vector<long long>& h_class_sizes,
                                  const std::vector<int>& fusion,
                                  const std::vector<long long>& g_class_sizes,
                                  long long h_order, long long g_order);

// Values of row `row` of the H_n table on the classes of H_{n-1}.
std::vector<long long> restrict_character(const HnCharacterTable& hn, int row,
                                          const HnCharacterTable& hm);

}   // namespace hgp
