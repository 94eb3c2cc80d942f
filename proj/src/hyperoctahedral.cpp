#include "hgp/hyperoctahedral.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace hgp {

bool is_member_h(const Permutation& p) {
    if (p.degree() % 2 != 0) throw std::invalid_argument("is_member_h: odd degree");
    const int n = p.degree() / 2;
    for (int i = 1; i <= n; ++i) {
        int a = p(2 * i - 1), b = p(2 * i);
        if ((a + 1) / 2 != (b + 1) / 2) return false;   // images land in one block
    }
    return true;
}

long long h_order(int n) {
    long long o = factorial(n);
    for (int i = 0; i < n; ++i) o *= 2;
    return o;
}

GroupTable enumerate_h(int n, long long max_order) {
    if (n < 0) throw std::invalid_argument("enumerate_h: n must be >= 0");
    if (h_order(n) > max_order)
        throw std::invalid_argument("enumerate_h: |H_" + std::to_string(n) + "| = " +
                                    std::to_string(h_order(n)) + " exceeds the cap of " +
                                    std::to_string(max_order));
    std::vector<Permutation> elems;
    elems.reserve(static_cast<size_t>(h_order(n)));
    std::vector<int> pi(n);
    std::iota(pi.begin(), pi.end(), 1);
    do {
        for (uint32_t mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> im(2 * n);
            for (int i = 0; i < n; ++i) {
                int j = pi[i];
                bool flip = (mask >> i) & 1;
                im[2 * i] = flip ? 2 * j : 2 * j - 1;
                im[2 * i + 1] = flip ? 2 * j - 1 : 2 * j;
            }
            elems.emplace_back(std::move(im));
        }
    } while (std::next_permutation(pi.begin(), pi.end()));
    return GroupTable::from_elements(std::move(elems));
}

SignedPermutation to_signed(const Permutation& w) {
    if (!is_member_h(w)) throw std::invalid_argument("to_signed: not a member of H_n");
    const int n = w.degree() / 2;
    std::vector<int> block_im(n);
    std::vector<char> flips(n);
    for (int i = 1; i <= n; ++i) {
        int a = w(2 * i - 1);
        block_im[i - 1] = (a + 1) / 2;
        flips[i - 1] = (a % 2 == 0);   // odd point of block i sent to the even point
    }
    return SignedPermutation{Permutation(std::move(block_im)), std::move(flips)};
}

Permutation from_signed(const SignedPermutation& s) {
    const int n = s.blocks();
    std::vector<int> im(2 * n);
    for (int i = 1; i <= n; ++i) {
        int j = s.block_map(i);
        bool flip = s.flips[i - 1];
        im[2 * i - 2] = flip ? 2 * j : 2 * j - 1;
        im[2 * i - 1] = flip ? 2 * j - 1 : 2 * j;
    }
    return Permutation(std::move(im));
}

namespace {

struct BlockCycleData {
    std::vector<int> first_parts, second_parts;
    MarkComponent last_component = MarkComponent::First;
    int last_part = 0;
};

// Walk the block cycles of the signed view; a cycle of length l with an even
// number of flips expands to a mirrored pair of l-cycles in S_2n (part of
// lambda1), an odd number to one self-mirrored 2l-cycle (part of lambda2).
BlockCycleData block_cycle_data(const Permutation& w) {
    SignedPermutation s = to_signed(w);
    const int n = s.blocks();
    BlockCycleData out;
    std::vector<char> seen(n, 0);
    for (int start = 1; start <= n; ++start) {
        if (seen[start - 1]) continue;
        int len = 0, parity = 0, b = start;
        bool carries_last = false;
        do {
            seen[b - 1] = 1;
            parity ^= s.flips[b - 1] ? 1 : 0;
            if (b == n) carries_last = true;
            ++len;
            b = s.block_map(b);
        } while (b != start);
        auto comp = parity == 0 ? MarkComponent::First : MarkComponent::Second;
        (parity == 0 ? out.first_parts : out.second_parts).push_back(len);
        if (carries_last) {
            out.last_component = comp;
            out.last_part = len;
        }
    }
    std::sort(out.first_parts.rbegin(), out.first_parts.rend());
    std::sort(out.second_parts.rbegin(), out.second_parts.rend());
    return out;
}

}   // namespace

Bipartition hn_type(const Permutation& w) {
    auto d = block_cycle_data(w);
    return Bipartition{Partition(d.first_parts), Partition(d.second_parts)};
}

MarkedBipartition hn_marked_type(const Permutation& w) {
    if (w.degree() < 2) throw std::invalid_argument("hn_marked_type: needs n >= 1");
    auto d = block_cycle_data(w);
    MarkedBipartition m{Bipartition{Partition(d.first_parts), Partition(d.second_parts)},
                        d.last_component, d.last_part};
    m.validate();
    return m;
}

Permutation embed_h(const Permutation& w_of_smaller, int n) {
    if (w_of_smaller.degree() != 2 * (n - 1))
        throw std::invalid_argument("embed_h: degree mismatch");
    std::vector<int> im(2 * n);
    for (int x = 1; x <= 2 * (n - 1); ++x) im[x - 1] = w_of_smaller(x);
    im[2 * n - 2] = 2 * n - 1;
    im[2 * n - 1] = 2 * n;
    return Permutation(std::move(im));
}

IndexSet embedded_h_indices(const GroupTable& hn, const GroupTable& hm) {
    const int n = hn.degree() / 2;
    IndexSet idx;
    idx.reserve(hm.order());
    for (const auto& k : hm.elements()) idx.push_back(hn.index_of(embed_h(k, n)));
    std::sort(idx.begin(), idx.end());
    return idx;
}

template <typename Key, typename TypeFn>
static std::vector<std::pair<Key, IndexSet>> classify(const GroupTable& g, TypeFn type_of,
                                                      const std::vector<Key>& all_keys) {
    std::map<Key, IndexSet> fibers;
    for (const Key& k : all_keys) fibers[k];   // every key present, even if a fiber were empty
    for (uint32_t i = 0; i < g.order(); ++i) fibers[type_of(g.element(i))].push_back(i);
    std::vector<std::pair<Key, IndexSet>> out(fibers.begin(), fibers.end());
    return out;
}

std::vector<std::pair<Bipartition, IndexSet>> hn_conjugacy_classes(const GroupTable& hn) {
    const int n = hn.degree() / 2;
    return classify<Bipartition>(hn, [](const Permutation& w) { return hn_type(w); },
                                 enumerate_bipartitions(n));
}

std::vector<std::pair<MarkedBipartition, IndexSet>> hn_relative_classes(const GroupTable& hn) {
    const int n = hn.degree() / 2;
    if (n < 1) throw std::invalid_argument("hn_relative_classes: needs n >= 1");
    return classify<MarkedBipartition>(hn, [](const Permutation& w) { return hn_marked_type(w); },
                                       enumerate_marked_bipartitions(n));
}

long long hn_centralizer_order(int n, const Bipartition& type) {
    if (type.size() != n) throw std::invalid_argument("hn_centralizer_order: size mismatch");
    long long c = z_factor(type.first) * z_factor(type.second);
    for (int i = 0; i < type.first.length() + type.second.length(); ++i) c *= 2;
    return c;
}

long long hn_class_size(int n, const Bipartition& type) {
    return h_order(n) / hn_centralizer_order(n, type);
}

}   // namespace hgp
