#pragma once

// Zonal spherical functions and generalized characters of the pair
// (H_n x H_{n-1}, diag H_{n-1}), and the decomposition of the induced
// representation of the trivial character of the diagonal.
//
// The diag double cosets of the product biject with the H_{n-1}-conjugacy
// classes of H_n via (x, y) -> x emb(y)^{-1}, i.e. with marked bipartitions
// of n; spherical values are stored per marked bipartition and evaluated at
// arbitrary arguments through that key.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "hgp/character.hpp"
#include "hgp/class_function.hpp"
#include "hgp/gelfand.hpp"
#include "hgp/group_table.hpp"
#include "hgp/hyperoctahedral.hpp"
#include "hgp/partition.hpp"
#include "hgp/rational.hpp"

namespace hgp {

// Everything about (G, K) = (H_n, H_{n-1}) needed downstream: both groups
// enumerated, both character tables, all three class partitions, and the
// embedded copies of the K elements.
struct HnPair {
    int n = 1;
    GroupTable g;   // H_n on [2n]
    GroupTable k;   // H_{n-1} on [2n-2]
    IndexSet k_in_g;

    HnCharacterTable gt, kt;
    std::vector<std::pair<Bipartition, IndexSet>> g_classes, k_classes;
    std::vector<std::pair<MarkedBipartition, IndexSet>> rel_classes;

    std::vector<Permutation> k_embedded;   // emb(k_i), aligned with k's indices
    std::vector<int> k_class_of_k;         // H_{n-1}-class (kt column) of each k element

    int g_class_of(const Permutation& x) const;        // by hn_type
    int rel_class_of(const Permutation& x) const;      // by hn_marked_type
    const Permutation& g_class_rep(int c) const { return g.element(g_classes[c].second.front()); }
    const Permutation& k_class_rep(int c) const { return k.element(k_classes[c].second.front()); }
    const Permutation& rel_class_rep(int c) const {
        return g.element(rel_classes[c].second.front());
    }

    std::map<Bipartition, int> g_class_index, k_class_index;
    std::map<MarkedBipartition, int> rel_class_index;
};

HnPair make_hn_pair(int n, long long max_order = kDefaultMaxGroupOrder);

struct SphericalLabel {
    Bipartition sigma;   // of n-1
    Bipartition rho;     // of n, with covers(sigma, rho)

    friend bool operator==(const SphericalLabel&, const SphericalLabel&) = default;
};

// All covering pairs for rank n, ordered by (rho, sigma) canonically.
std::vector<SphericalLabel> covering_labels(int n);

// omega^{sigma -> rho}(x, y) = (1/|K|) sum_h chi^rho(x emb(h)) chi^sigma(y h)
struct SphericalFunction {
    SphericalLabel label;
    std::vector<Rat> by_marked_class;   // aligned with pair.rel_classes

    Rat eval(const HnPair& pair, const Permutation& x, const Permutation& y) const;
    // value at the fixed canonical class representatives (rep_x, rep_y)
    Rat at_class_pair(const HnPair& pair, int g_class, int k_class) const;
};

SphericalFunction zonal_spherical(const HnPair& pair, const Bipartition& sigma,
                                  const Bipartition& rho);

// Direct double sum, no double-coset shortcut; test/cross-check path.
Rat zonal_spherical_direct(const HnPair& pair, const SphericalLabel& label,
                           const Permutation& x, const Permutation& y);
// The generic zonal-spherical form (1/|K|) sum_h chi^rho(x^{-1} emb(h)) chi^sigma(y^{-1} h).
Rat zonal_spherical_inverse_form(const HnPair& pair, const SphericalLabel& label,
                                 const Permutation& x, const Permutation& y);

// varpi^{sigma -> rho}(x) = chi^sigma(1)/|K| * sum_h chi^rho(x emb(h)) chi^sigma(h),
// computed with both the table prefactor and the reduced prefactor
// f^{sigma1} f^{sigma2} / (2^{n-1} |sigma1|! |sigma2|!); throws on mismatch.
struct GeneralizedCharacter {
    SphericalLabel label;
    std::vector<Rat> by_marked_class;

    Rat eval(const HnPair& pair, const Permutation& x) const;
    ClassFunction as_class_function(const HnPair& pair) const;
};

GeneralizedCharacter generalized_character(const HnPair& pair, const Bipartition& sigma,
                                           const Bipartition& rho);

// Permutation character of G x K on the cosets of diag(K), per product class:
// pi[c][d] = #{ a in G : a^{-1} g_c a = emb(k_d) }.
std::vector<std::vector<long long>> induced_rep_character(const HnPair& pair);

// Same values from an explicitly materialized product group acting on the
// actual coset set; only feasible for small n (order |G| |K|).
std::vector<std::vector<long long>> induced_rep_character_direct(const HnPair& pair,
                                                                 long long max_order = 1000);

// <pi, chi^rho x chi^sigma> for every (rho, sigma); exact nonnegative integers.
std::vector<std::vector<long long>> decompose_induced(
    const HnPair& pair, const std::vector<std::vector<long long>>& pi);

// One side of the functional equation: (1/|K~|) sum_k omega(x k y) with
// x = (x1, x2), y = (y1, y2) in G x K and k running over diag(K).
Rat functional_equation_average(const HnPair& pair, const SphericalFunction& f,
                                const Permutation& x1, const Permutation& x2,
                                const Permutation& y1, const Permutation& y2);

}   // namespace hgp
