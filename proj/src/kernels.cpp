#include "hgp/kernels.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hgp {
namespace kernels {

namespace {

// Raw one-line forms as flat arrays for allocation-free inner loops.
struct Flat {
    int m = 0;
    size_t count = 0;
    std::vector<int> data;   // data[i*m + x] = image of x+1 under element i, still 1-based

    Flat(const GroupTable& g, const IndexSet& subset) : m(g.degree()), count(subset.size()) {
        data.reserve(subset.size() * m);
        for (uint32_t i : subset)
            for (int v : g.element(i).images()) data.push_back(v);
    }
    const int* row(size_t i) const { return data.data() + i * m; }
};

uint64_t pack_raw(const int* im, int m) {
    uint64_t key = 0;
    for (int i = 0; i < m; ++i) key |= static_cast<uint64_t>(im[i] - 1) << (4 * i);
    return key;
}

IndexSet all_indices(const GroupTable& g) {
    IndexSet all(g.order());
    for (uint32_t i = 0; i < g.order(); ++i) all[i] = i;
    return all;
}

uint32_t conjugation_key_of(const GroupTable& g, const Flat& ks, const int* gi, int m,
                            std::vector<int>& scratch) {
    uint32_t best = UINT32_MAX;
    for (size_t t = 0; t < ks.count; ++t) {
        const int* k = ks.row(t);
        for (int x = 0; x < m; ++x) scratch[k[x] - 1] = k[gi[x] - 1];   // (k g k^{-1})
        best = std::min(best, *g.find_packed(pack_raw(scratch.data(), m)));
    }
    return best;
}

}   // namespace

std::vector<uint32_t> k_conjugation_keys_serial(const GroupTable& g, const IndexSet& k) {
    const int m = g.degree();
    Flat ks(g, k), gs(g, all_indices(g));
    std::vector<uint32_t> keys(g.order());
    std::vector<int> scratch(m);
    for (size_t i = 0; i < g.order(); ++i)
        keys[i] = conjugation_key_of(g, ks, gs.row(i), m, scratch);
    return keys;
}

std::vector<uint32_t> k_conjugation_keys(const GroupTable& g, const IndexSet& k) {
    const int m = g.degree();
    Flat ks(g, k), gs(g, all_indices(g));
    std::vector<uint32_t> keys(g.order());
#pragma omp parallel
    {
        std::vector<int> scratch(m);
#pragma omp for schedule(static)
        for (long long i = 0; i < static_cast<long long>(g.order()); ++i)
            keys[i] = conjugation_key_of(g, ks, gs.row(i), m, scratch);
    }
    return keys;
}

namespace {

// dc key = min over k1 of rk[k1 g], where rk[x] = min over k2 of idx(x k2).
std::vector<uint32_t> double_coset_keys_impl(const GroupTable& g, const IndexSet& k,
                                             bool parallel) {
    const int m = g.degree();
    Flat ks(g, k), gs(g, all_indices(g));
    std::vector<uint32_t> rk(g.order());
    std::vector<uint32_t> keys(g.order());

    auto right_key = [&](long long i, std::vector<int>& scratch) {
        const int* gi = gs.row(i);
        uint32_t best = UINT32_MAX;
        for (size_t t = 0; t < ks.count; ++t) {
            const int* kk = ks.row(t);
            for (int x = 0; x < m; ++x) scratch[x] = gi[kk[x] - 1];   // g o k
            best = std::min(best, *g.find_packed(pack_raw(scratch.data(), m)));
        }
        return best;
    };
    auto full_key = [&](long long i, std::vector<int>& scratch) {
        const int* gi = gs.row(i);
        uint32_t best = UINT32_MAX;
        for (size_t t = 0; t < ks.count; ++t) {
            const int* kk = ks.row(t);
            for (int x = 0; x < m; ++x) scratch[x] = kk[gi[x] - 1];   // k o g
            best = std::min(best, rk[*g.find_packed(pack_raw(scratch.data(), m))]);
        }
        return best;
    };

    if (parallel) {
#pragma omp parallel
        {
            std::vector<int> scratch(m);
#pragma omp for schedule(static)
            for (long long i = 0; i < static_cast<long long>(g.order()); ++i)
                rk[i] = right_key(i, scratch);
#pragma omp for schedule(static)
            for (long long i = 0; i < static_cast<long long>(g.order()); ++i)
                keys[i] = full_key(i, scratch);
        }
    } else {
        std::vector<int> scratch(m);
        for (long long i = 0; i < static_cast<long long>(g.order()); ++i)
            rk[i] = right_key(i, scratch);
        for (long long i = 0; i < static_cast<long long>(g.order()); ++i)
            keys[i] = full_key(i, scratch);
    }
    return keys;
}

}   // namespace

std::vector<uint32_t> double_coset_keys(const GroupTable& g, const IndexSet& k) {
    return double_coset_keys_impl(g, k, true);
}

std::vector<uint32_t> double_coset_keys_serial(const GroupTable& g, const IndexSet& k) {
    return double_coset_keys_impl(g, k, false);
}

namespace {

int32_t inverse_conjugator_of(const Flat& ks, const int* gi, const int* target, int m,
                              std::vector<int>& scratch) {
    for (size_t t = 0; t < ks.count; ++t) {
        const int* k = ks.row(t);
        for (int x = 0; x < m; ++x) scratch[k[x] - 1] = k[gi[x] - 1];
        if (std::equal(scratch.begin(), scratch.end(), target)) return static_cast<int32_t>(t);
    }
    return -1;
}

}   // namespace

std::vector<int32_t> inverse_conjugator_scan_serial(const GroupTable& g, const IndexSet& k) {
    const int m = g.degree();
    Flat ks(g, k), gs(g, all_indices(g));
    std::vector<int32_t> out(g.order());
    std::vector<int> scratch(m);
    for (size_t i = 0; i < g.order(); ++i)
        out[i] = inverse_conjugator_of(ks, gs.row(i), gs.row(g.inverse_index(i)), m, scratch);
    return out;
}

std::vector<int32_t> inverse_conjugator_scan(const GroupTable& g, const IndexSet& k) {
    const int m = g.degree();
    Flat ks(g, k), gs(g, all_indices(g));
    std::vector<int32_t> out(g.order());
#pragma omp parallel
    {
        std::vector<int> scratch(m);
#pragma omp for schedule(static)
        for (long long i = 0; i < static_cast<long long>(g.order()); ++i)
            out[i] = inverse_conjugator_of(ks, gs.row(i), gs.row(g.inverse_index(i)), m, scratch);
    }
    return out;
}

namespace {

// Structure-constant comparison for one ordered pair of parts.
bool pair_commutes(const GroupTable& g, const Flat& gs, const IndexSet& a, const IndexSet& b,
                   std::vector<uint32_t>& ab, std::vector<uint32_t>& ba,
                   std::vector<int>& scratch, uint32_t* witness_g) {
    const int m = g.degree();
    std::fill(ab.begin(), ab.end(), 0);
    std::fill(ba.begin(), ba.end(), 0);
    for (uint32_t ia : a) {
        const int* pa = gs.row(ia);
        for (uint32_t ib : b) {
            const int* pb = gs.row(ib);
            for (int x = 0; x < m; ++x) scratch[x] = pa[pb[x] - 1];   // a o b
            ++ab[*g.find_packed(pack_raw(scratch.data(), m))];
            for (int x = 0; x < m; ++x) scratch[x] = pb[pa[x] - 1];   // b o a
            ++ba[*g.find_packed(pack_raw(scratch.data(), m))];
        }
    }
    for (uint32_t e = 0; e < g.order(); ++e) {
        if (ab[e] != ba[e]) {
            *witness_g = e;
            return false;
        }
    }
    return true;
}

CommutativityResult convolution_commutativity_impl(const GroupTable& g,
                                                   const std::vector<IndexSet>& parts,
                                                   bool parallel) {
    const int m = g.degree();
    Flat gs(g, all_indices(g));
    std::vector<std::pair<uint32_t, uint32_t>> pairs;
    for (uint32_t i = 0; i < parts.size(); ++i)
        for (uint32_t j = i + 1; j < parts.size(); ++j) pairs.emplace_back(i, j);

    CommutativityResult result;
    result.pairs_checked = pairs.size();
    std::array<uint32_t, 3> best{UINT32_MAX, UINT32_MAX, UINT32_MAX};
    bool any_fail = false;

#pragma omp parallel if (parallel)
    {
        std::vector<uint32_t> ab(g.order()), ba(g.order());
        std::vector<int> scratch(m);
#pragma omp for schedule(dynamic)
        for (long long p = 0; p < static_cast<long long>(pairs.size()); ++p) {
            auto [i, j] = pairs[p];
            uint32_t wg = 0;
            if (!pair_commutes(g, gs, parts[i], parts[j], ab, ba, scratch, &wg)) {
#pragma omp critical
                {
                    any_fail = true;
                    std::array<uint32_t, 3> cand{i, j, wg};
                    best = std::min(best, cand);
                }
            }
        }
    }
    if (any_fail) {
        result.commutative = false;
        result.witness = best;
    }
    return result;
}

}   // namespace

CommutativityResult convolution_commutativity(const GroupTable& g,
                                              const std::vector<IndexSet>& parts) {
    return convolution_commutativity_impl(g, parts, true);
}

CommutativityResult convolution_commutativity_serial(const GroupTable& g,
                                                     const std::vector<IndexSet>& parts) {
    return convolution_commutativity_impl(g, parts, false);
}

}   // namespace kernels
}   // namespace hgp
