#include "hgp/character.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "hgp/hyperoctahedral.hpp"

namespace hgp {

namespace {

// Rim-hook recursion on first-column hook lengths (beta numbers): removing an
// r-hook replaces some b_i by b_i - r when that value is free, with sign
// (-1)^{number of b_j jumped over}.
struct MnContext {
    std::vector<int> mu;
    std::map<std::pair<std::vector<int>, size_t>, long long> memo;

    long long chi(const std::vector<int>& lambda, size_t pos) {
        if (pos == mu.size()) return 1;   // lambda is empty here by size bookkeeping
        auto key = std::make_pair(lambda, pos);
        if (auto it = memo.find(key); it != memo.end()) return it->second;

        const int r = mu[pos];
        const int rows = static_cast<int>(lambda.size());
        std::vector<int> beta(rows);
        for (int i = 0; i < rows; ++i) beta[i] = lambda[i] + (rows - 1 - i);

        long long total = 0;
        for (int i = 0; i < rows; ++i) {
            int target = beta[i] - r;
            if (target < 0) continue;
            if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
            int height = 0;   // betas strictly between target and beta[i]
            for (int j = 0; j < rows; ++j)
                if (beta[j] > target && beta[j] < beta[i]) ++height;
            std::vector<int> nb = beta;
            nb[i] = target;
            std::sort(nb.rbegin(), nb.rend());
            std::vector<int> next;
            for (int j = 0; j < rows; ++j) {
                int part = nb[j] - (rows - 1 - j);
                if (part > 0) next.push_back(part);
            }
            long long sub = chi(next, pos + 1);
            total += (height % 2 == 0) ? sub : -sub;
        }
        memo.emplace(std::move(key), total);
        return total;
    }
};

}   // namespace

long long sym_character(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw std::invalid_argument("sym_character: |lambda| != |mu|");
    MnContext ctx;
    ctx.mu = mu.parts();
    return ctx.chi(lambda.parts(), 0);
}

long long sym_degree(const Partition& lambda) {
    return sym_character(lambda, Partition(std::vector<int>(lambda.size(), 1)));
}

int SnCharacterTable::index_of(const Partition& p) const {
    for (size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == p) return static_cast<int>(i);
    throw std::out_of_range("partition not a label of this table");
}

long long SnCharacterTable::degree(int row) const {
    return entries[row].back();   // (1^n) is last in canonical order
}

SnCharacterTable sn_character_table(int n) {
    SnCharacterTable t;
    t.n = n;
    t.labels = enumerate_partitions(n);
    const long long nf = factorial(n);
    for (const auto& mu : t.labels) {
        t.centralizer_orders.push_back(z_factor(mu));
        t.class_sizes.push_back(nf / z_factor(mu));
    }
    for (const auto& lambda : t.labels) {
        std::vector<long long> row;
        row.reserve(t.labels.size());
        for (const auto& mu : t.labels) row.push_back(sym_character(lambda, mu));
        t.entries.push_back(std::move(row));
    }
    return t;
}

int HnCharacterTable::index_of(const Bipartition& b) const {
    for (size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == b) return static_cast<int>(i);
    throw std::out_of_range("bipartition not a label of this table");
}

long long HnCharacterTable::degree(int row) const {
    Bipartition identity{Partition(std::vector<int>(n, 1)), Partition{}};
    return entries[row][index_of(identity)];
}

namespace {

// All ways to take a sub-multiset of the parts; emitted as (taken, rest).
void multiset_splits(const std::vector<int>& parts,
                     std::vector<std::pair<std::vector<int>, std::vector<int>>>& out) {
    out.clear();
    // run-length encode
    std::vector<std::pair<int, int>> runs;
    for (int v : parts) {
        if (!runs.empty() && runs.back().first == v)
            ++runs.back().second;
        else
            runs.emplace_back(v, 1);
    }
    std::vector<int> taken, rest;
    std::function<void(size_t)> rec = [&](size_t ri) {
        if (ri == runs.size()) {
            out.emplace_back(taken, rest);
            return;
        }
        auto [v, count] = runs[ri];
        for (int take = 0; take <= count; ++take) {
            size_t tb = taken.size(), rb = rest.size();
            taken.insert(taken.end(), take, v);
            rest.insert(rest.end(), count - take, v);
            rec(ri + 1);
            taken.resize(tb);
            rest.resize(rb);
        }
    };
    rec(0);
}

}   // namespace

HnCharacterTable hn_character_table(int n) {
    HnCharacterTable t;
    t.n = n;
    t.labels = enumerate_bipartitions(n);
    for (const auto& cls : t.labels) {
        t.class_sizes.push_back(hn_class_size(n, cls));
        t.centralizer_orders.push_back(hn_centralizer_order(n, cls));
    }

    // S_m tables for all character evaluations chi^lambda(alpha1 U beta1)
    std::vector<SnCharacterTable> sym;
    for (int m = 0; m <= n; ++m) sym.push_back(sn_character_table(m));
    auto sym_value = [&](const Partition& lambda, const Partition& type) {
        const auto& tab = sym[lambda.size()];
        return tab.value(tab.index_of(lambda), tab.index_of(type));
    };

    std::vector<std::pair<std::vector<int>, std::vector<int>>> alpha_splits, beta_splits;
    for (const auto& row_label : t.labels) {
        const int k = row_label.first.size();
        std::vector<long long> row;
        row.reserve(t.labels.size());
        for (size_t col = 0; col < t.labels.size(); ++col) {
            const Bipartition& cls = t.labels[col];
            multiset_splits(cls.first.parts(), alpha_splits);
            multiset_splits(cls.second.parts(), beta_splits);
            long long acc = 0;
            for (const auto& [a1, a2] : alpha_splits) {
                for (const auto& [b1, b2] : beta_splits) {
                    int s1 = 0;
                    for (int v : a1) s1 += v;
                    for (int v : b1) s1 += v;
                    if (s1 != k) continue;
                    Bipartition c1{Partition(a1), Partition(b1)};
                    Bipartition c2{Partition(a2), Partition(b2)};
                    long long term = hn_class_size(k, c1) *
                                     hn_class_size(n - k, c2);
                    term *= sym_value(row_label.first, union_parts(c1.first, c1.second));
                    term *= sym_value(row_label.second, union_parts(c2.first, c2.second));
                    if (c2.second.length() % 2 != 0) term = -term;   // delta twist
                    acc += term;
                }
            }
            // Ind scaling: |G| / (|H_k x H_{n-k}| |C|)
            Rat value(acc * h_order(n), h_order(k) * h_order(n - k) * t.class_sizes[col]);
            if (!is_integral(value))
                throw std::logic_error("hn_character_table: non-integral induced value");
            row.push_back(value.numerator());
        }
        t.entries.push_back(std::move(row));
    }
    return t;
}

Bipartition fuse_classes(const Bipartition& a, const Bipartition& b) {
    return Bipartition{union_parts(a.first, b.first), union_parts(a.second, b.second)};
}

Bipartition embed_class(const Bipartition& type_of_smaller) {
    return fuse_classes(type_of_smaller, Bipartition{Partition({1}), Partition{}});
}

std::vector<Rat> induce_character(const std::vector<Rat>& chi_on_h,
                                  const std::vector<long long>& h_class_sizes,
                                  const std::vector<int>& fusion,
                                  const std::vector<long long>& g_class_sizes,
                                  long long h_order, long long g_order) {
    if (chi_on_h.size() != h_class_sizes.size() || chi_on_h.size() != fusion.size())
        throw std::invalid_argument("induce_character: inconsistent H-class data");
    std::vector<Rat> out(g_class_sizes.size(), Rat(0));
    for (size_t d = 0; d < chi_on_h.size(); ++d)
        out.at(fusion[d]) += Rat(h_class_sizes[d]) * chi_on_h[d];
    for (size_t c = 0; c < out.size(); ++c)
        out[c] *= Rat(g_order, h_order * g_class_sizes[c]);
    return out;
}

std::vector<long long> restrict_character(const HnCharacterTable& hn, int row,
                                          const HnCharacterTable& hm) {
    if (hm.n != hn.n - 1) throw std::invalid_argument("restrict_character: rank mismatch");
    std::vector<long long> out;
    out.reserve(hm.labels.size());
    for (const auto& cls : hm.labels)
        out.push_back(hn.value(row, hn.index_of(embed_class(cls))));
    return out;
}

}   // namespace hgp
