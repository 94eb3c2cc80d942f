#include "hgp/wreath.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hgp {

long long WreathGroupSpec::order() const {
    long long o = factorial(n);
    for (int i = 0; i < n; ++i) o *= factorial(k);
    return o;
}

bool is_member_wreath(const WreathGroupSpec& spec, const Permutation& p) {
    if (p.degree() != spec.degree())
        throw std::invalid_argument("is_member_wreath: degree mismatch");
    for (int r = 1; r <= spec.n; ++r) {
        int target = (p((r - 1) * spec.k + 1) - 1) / spec.k;
        for (int j = 2; j <= spec.k; ++j)
            if ((p((r - 1) * spec.k + j) - 1) / spec.k != target) return false;
    }
    return true;
}

GroupTable enumerate_wreath(const WreathGroupSpec& spec, long long max_order) {
    if (spec.k < 1 || spec.n < 0) throw std::invalid_argument("enumerate_wreath: bad spec");
    if (spec.order() > max_order)
        throw std::invalid_argument("enumerate_wreath: order " + std::to_string(spec.order()) +
                                    " exceeds the cap of " + std::to_string(max_order));

    // block permutation x per-block inner permutations
    std::vector<std::vector<int>> inner;   // all one-line forms of S_k
    {
        std::vector<int> s(spec.k);
        std::iota(s.begin(), s.end(), 1);
        do inner.push_back(s);
        while (std::next_permutation(s.begin(), s.end()));
    }
    std::vector<Permutation> elems;
    elems.reserve(static_cast<size_t>(spec.order()));
    std::vector<int> pi(spec.n);
    std::iota(pi.begin(), pi.end(), 1);
    std::vector<size_t> choice(spec.n, 0);
    do {
        std::fill(choice.begin(), choice.end(), 0);
        while (true) {
            std::vector<int> im(spec.degree());
            for (int i = 0; i < spec.n; ++i) {
                const auto& s = inner[choice[i]];
                for (int j = 0; j < spec.k; ++j)
                    im[i * spec.k + j] = (pi[i] - 1) * spec.k + s[j];
            }
            elems.emplace_back(std::move(im));
            int pos = spec.n - 1;
            while (pos >= 0 && ++choice[pos] == inner.size()) choice[pos--] = 0;
            if (pos < 0) break;
        }
    } while (std::next_permutation(pi.begin(), pi.end()));
    return GroupTable::from_elements(std::move(elems));
}

IndexSet wreath_point_stabilizer_indices(const WreathGroupSpec& spec, const GroupTable& table) {
    IndexSet idx;
    for (uint32_t i = 0; i < table.order(); ++i) {
        const Permutation& p = table.element(i);
        bool fixes = true;
        for (int x = spec.k * (spec.n - 1) + 1; x <= spec.degree() && fixes; ++x)
            fixes = p(x) == x;
        if (fixes) idx.push_back(i);
    }
    return idx;
}

WreathWitnessReport wreath_conjugacy_check(const WreathGroupSpec& spec, const Permutation& omega) {
    if (!is_member_wreath(spec, omega))
        throw std::invalid_argument("wreath_conjugacy_check: omega is not a member");
    GroupTable table = enumerate_wreath(spec);
    IndexSet sub = wreath_point_stabilizer_indices(spec, table);
    Permutation target = inverse(omega);
    WreathWitnessReport report{spec, omega, false, Permutation::identity(spec.degree()), sub.size()};
    for (uint32_t i : sub) {
        const Permutation& alpha = table.element(i);
        if (conjugate(omega, alpha) == target) {
            report.conjugate_to_inverse = true;
            report.conjugator = alpha;
            break;
        }
    }
    return report;
}

WreathWitnessReport wreath_counterexample_check(int k, int n) {
    WreathGroupSpec spec{k, n};
    // a k-cycle on the last block, fixing everything else
    Cycle c;
    for (int j = 1; j <= k; ++j) c.points.push_back((n - 1) * k + j);
    Permutation omega = permutation_from_cycles(spec.degree(), {c});
    return wreath_conjugacy_check(spec, omega);
}

}   // namespace hgp
