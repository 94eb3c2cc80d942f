#include "hgp/gelfand.hpp"

#include <map>
#include <stdexcept>

#include "hgp/kernels.hpp"

namespace hgp {

static std::vector<IndexSet> group_by_key(const std::vector<uint32_t>& keys) {
    std::map<uint32_t, IndexSet> fibers;
    for (uint32_t i = 0; i < keys.size(); ++i) fibers[keys[i]].push_back(i);
    std::vector<IndexSet> out;
    out.reserve(fibers.size());
    for (auto& [key, members] : fibers) out.push_back(std::move(members));
    return out;
}

std::vector<IndexSet> double_cosets(const GroupTable& g, const IndexSet& k) {
    require_subgroup(g, k);
    return group_by_key(kernels::double_coset_keys(g, k));
}

std::vector<IndexSet> k_conjugacy_classes(const GroupTable& g, const IndexSet& k) {
    require_subgroup(g, k);
    return group_by_key(kernels::k_conjugation_keys(g, k));
}

PairCheck is_symmetric_pair(const GroupTable& g, const IndexSet& k) {
    require_subgroup(g, k);
    auto keys = kernels::double_coset_keys(g, k);
    for (uint32_t i = 0; i < g.order(); ++i)
        if (keys[i] != keys[g.inverse_index(i)]) return PairCheck{false, i};
    return PairCheck{};
}

PairCheck is_diag_symmetric_gelfand(const GroupTable& g, const IndexSet& k) {
    require_subgroup(g, k);
    auto found = kernels::inverse_conjugator_scan(g, k);
    for (uint32_t i = 0; i < g.order(); ++i)
        if (found[i] < 0) return PairCheck{false, i};
    return PairCheck{};
}

GelfandReport is_gelfand_via_commutativity(const GroupTable& g, const IndexSet& k,
                                           long long budget) {
    require_subgroup(g, k);
    long long n = static_cast<long long>(g.order());
    if (n * n > budget)
        throw std::invalid_argument("is_gelfand_via_commutativity: |G|^2 = " +
                                    std::to_string(n * n) + " exceeds the budget of " +
                                    std::to_string(budget));
    auto cosets = double_cosets(g, k);
    auto result = kernels::convolution_commutativity(g, cosets);
    GelfandReport report;
    report.commutative = result.commutative;
    report.num_double_cosets = cosets.size();
    if (result.witness) report.witness = (*result.witness)[2];
    return report;
}

ClassFunction phi_map(const GroupTable& g, const IndexSet& k, const DiagBiInvariant& f) {
    require_subgroup(g, k);
    if (f.on_g.size() != g.order()) throw std::invalid_argument("phi_map: value count mismatch");
    // double-coset constancy of F <=> K-class constancy of F(., 1)
    auto keys = kernels::k_conjugation_keys(g, k);
    for (uint32_t i = 0; i < g.order(); ++i)
        if (f.on_g[i] != f.on_g[keys[i]])
            throw std::invalid_argument("phi_map: input is not double-coset constant");
    ClassFunction out{&g, f.on_g};
    Rat scale(static_cast<long long>(k.size()));
    for (auto& v : out.values) v *= scale;
    return out;
}

}   // namespace hgp
