#pragma once

// Exact-rational functions on an enumerated group, the convolution product,
// and the inner-product/norm helpers used by the Gelfand-pair checks.

#include <vector>

#include "hgp/group_table.hpp"
#include "hgp/rational.hpp"

namespace hgp {

// Dense function on a group; class structure, when relevant, is imposed by
// the constructors.
struct ClassFunction {
    const GroupTable* carrier = nullptr;
    std::vector<Rat> values;   // one per element

    Rat operator()(uint32_t i) const { return values[i]; }
    friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
        return a.carrier == b.carrier && a.values == b.values;
    }
};

ClassFunction zero_function(const GroupTable& g);
ClassFunction constant_function(const GroupTable& g, const Rat& c);
ClassFunction indicator(const GroupTable& g, const IndexSet& subset);
ClassFunction delta_at(const GroupTable& g, uint32_t index);
// Expand per-class values over a partition of the element indices.
ClassFunction from_class_values(const GroupTable& g, const std::vector<IndexSet>& classes,
                                const std::vector<Rat>& per_class);

ClassFunction add(const ClassFunction& a, const ClassFunction& b);
ClassFunction scale(const Rat& c, const ClassFunction& f);

// (f1 * f2)(g) = sum_h f1(g h^{-1}) f2(h)
ClassFunction convolve(const ClassFunction& f1, const ClassFunction& f2);

// <f1,f2> = (1/|G|) sum_g f1(g) f2(g); values are rational, so conjugation is
// the identity.
Rat inner_product(const ClassFunction& f1, const ClassFunction& f2);

// ||f||^2 = sum_g f(g)^2 without the 1/|G| normalization (the L(X) norm in
// which the Phi isometry-scaling identity holds).
Rat norm_sq_unnormalized(const ClassFunction& f);

}   // namespace hgp
