#include "hgp/spherical.hpp"

#include <algorithm>
#include <stdexcept>

namespace hgp {

int HnPair::g_class_of(const Permutation& x) const {
    return g_class_index.at(hn_type(x));
}

int HnPair::rel_class_of(const Permutation& x) const {
    return rel_class_index.at(hn_marked_type(x));
}

HnPair make_hn_pair(int n, long long max_order) {
    if (n < 1) throw std::invalid_argument("make_hn_pair: n must be >= 1");
    HnPair p;
    p.n = n;
    p.g = enumerate_h(n, max_order);
    p.k = enumerate_h(n - 1, max_order);
    p.k_in_g.reserve(p.k.order());
    for (const auto& e : p.k.elements()) p.k_in_g.push_back(p.g.index_of(embed_h(e, n)));
    std::sort(p.k_in_g.begin(), p.k_in_g.end());

    p.gt = hn_character_table(n);
    p.kt = hn_character_table(n - 1);
    p.g_classes = hn_conjugacy_classes(p.g);
    p.k_classes = hn_conjugacy_classes(p.k);
    p.rel_classes = hn_relative_classes(p.g);

    for (size_t i = 0; i < p.g_classes.size(); ++i) p.g_class_index[p.g_classes[i].first] = i;
    for (size_t i = 0; i < p.k_classes.size(); ++i) p.k_class_index[p.k_classes[i].first] = i;
    for (size_t i = 0; i < p.rel_classes.size(); ++i)
        p.rel_class_index[p.rel_classes[i].first] = i;

    // class labels coincide with table column labels in the same order
    for (size_t i = 0; i < p.g_classes.size(); ++i)
        if (!(p.g_classes[i].first == p.gt.labels[i]))
            throw std::logic_error("class/table label order mismatch");

    p.k_embedded.reserve(p.k.order());
    p.k_class_of_k.reserve(p.k.order());
    for (const auto& e : p.k.elements()) {
        p.k_embedded.push_back(embed_h(e, n));
        p.k_class_of_k.push_back(p.k_class_index.at(hn_type(e)));
    }
    return p;
}

std::vector<SphericalLabel> covering_labels(int n) {
    std::vector<SphericalLabel> out;
    for (const auto& rho : enumerate_bipartitions(n))
        for (const auto& sigma : enumerate_bipartitions(n - 1))
            if (covers(sigma, rho)) out.push_back(SphericalLabel{sigma, rho});
    return out;
}

namespace {

// sum_h chi^rho(x emb(h)) chi^sigma(h); the common integer core.
long long spherical_sum_at(const HnPair& pair, int rho_row, int sigma_row,
                           const Permutation& x) {
    long long acc = 0;
    const auto& rho_vals = pair.gt.entries[rho_row];
    const auto& sigma_vals = pair.kt.entries[sigma_row];
    for (size_t i = 0; i < pair.k.order(); ++i) {
        Permutation prod = compose(x, pair.k_embedded[i]);
        acc += rho_vals[pair.g_class_of(prod)] * sigma_vals[pair.k_class_of_k[i]];
    }
    return acc;
}

void require_covering(const SphericalLabel& label, int n) {
    if (label.rho.size() != n || label.sigma.size() != n - 1 || !covers(label.sigma, label.rho))
        throw std::invalid_argument("label (sigma, rho) is not a covering pair");
}

}   // namespace

Rat SphericalFunction::eval(const HnPair& pair, const Permutation& x,
                            const Permutation& y) const {
    // key of the diag double coset of (x, y) is the marked type of x emb(y)^{-1}
    Permutation key = compose(x, embed_h(inverse(y), pair.n));
    return by_marked_class[pair.rel_class_of(key)];
}

Rat SphericalFunction::at_class_pair(const HnPair& pair, int g_class, int k_class) const {
    return eval(pair, pair.g_class_rep(g_class), pair.k_class_rep(k_class));
}

SphericalFunction zonal_spherical(const HnPair& pair, const Bipartition& sigma,
                                  const Bipartition& rho) {
    SphericalLabel label{sigma, rho};
    require_covering(label, pair.n);
    const int rho_row = pair.gt.index_of(rho);
    const int sigma_row = pair.kt.index_of(sigma);
    const Rat inv_k(1, static_cast<long long>(pair.k.order()));

    SphericalFunction f;
    f.label = label;
    f.by_marked_class.resize(pair.rel_classes.size());
#pragma omp parallel for schedule(dynamic)
    for (long long c = 0; c < static_cast<long long>(pair.rel_classes.size()); ++c)
        f.by_marked_class[c] =
            inv_k * Rat(spherical_sum_at(pair, rho_row, sigma_row, pair.rel_class_rep(c)));
    return f;
}

Rat zonal_spherical_direct(const HnPair& pair, const SphericalLabel& label,
                           const Permutation& x, const Permutation& y) {
    require_covering(label, pair.n);
    const int rho_row = pair.gt.index_of(label.rho);
    const int sigma_row = pair.kt.index_of(label.sigma);
    long long acc = 0;
    const auto& rho_vals = pair.gt.entries[rho_row];
    const auto& sigma_vals = pair.kt.entries[sigma_row];
    for (size_t i = 0; i < pair.k.order(); ++i) {
        Permutation gprod = compose(x, pair.k_embedded[i]);
        Permutation kprod = compose(y, pair.k.element(i));
        acc += rho_vals[pair.g_class_of(gprod)] *
               sigma_vals[pair.k_class_index.at(hn_type(kprod))];
    }
    return Rat(acc, static_cast<long long>(pair.k.order()));
}

Rat zonal_spherical_inverse_form(const HnPair& pair, const SphericalLabel& label,
                                 const Permutation& x, const Permutation& y) {
    require_covering(label, pair.n);
    const int rho_row = pair.gt.index_of(label.rho);
    const int sigma_row = pair.kt.index_of(label.sigma);
    const Permutation xi = inverse(x), yi = inverse(y);
    long long acc = 0;
    for (size_t i = 0; i < pair.k.order(); ++i) {
        Permutation gprod = compose(xi, pair.k_embedded[i]);
        Permutation kprod = compose(yi, pair.k.element(i));
        acc += pair.gt.entries[rho_row][pair.g_class_of(gprod)] *
               pair.kt.entries[sigma_row][pair.k_class_index.at(hn_type(kprod))];
    }
    return Rat(acc, static_cast<long long>(pair.k.order()));
}

Rat GeneralizedCharacter::eval(const HnPair& pair, const Permutation& x) const {
    return by_marked_class[pair.rel_class_of(x)];
}

ClassFunction GeneralizedCharacter::as_class_function(const HnPair& pair) const {
    std::vector<IndexSet> classes;
    classes.reserve(pair.rel_classes.size());
    for (const auto& [key, members] : pair.rel_classes) classes.push_back(members);
    return from_class_values(pair.g, classes, by_marked_class);
}

GeneralizedCharacter generalized_character(const HnPair& pair, const Bipartition& sigma,
                                           const Bipartition& rho) {
    SphericalLabel label{sigma, rho};
    require_covering(label, pair.n);
    const int rho_row = pair.gt.index_of(rho);
    const int sigma_row = pair.kt.index_of(sigma);

    // prefactor two ways: table degree vs the reduced degree form
    const Rat table_pref(pair.kt.degree(sigma_row), static_cast<long long>(pair.k.order()));
    long long two_pow = 1;
    for (int i = 0; i < pair.n - 1; ++i) two_pow *= 2;
    const Rat reduced_pref(sym_degree(sigma.first) * sym_degree(sigma.second),
                           two_pow * factorial(sigma.first.size()) *
                               factorial(sigma.second.size()));
    if (table_pref != reduced_pref)
        throw std::logic_error("generalized_character: degree formula mismatch for sigma = " +
                               sigma.to_string());

    GeneralizedCharacter f;
    f.label = label;
    f.by_marked_class.resize(pair.rel_classes.size());
#pragma omp parallel for schedule(dynamic)
    for (long long c = 0; c < static_cast<long long>(pair.rel_classes.size()); ++c) {
        long long s = spherical_sum_at(pair, rho_row, sigma_row, pair.rel_class_rep(c));
        Rat via_table = table_pref * Rat(s);
        Rat via_reduced = reduced_pref * Rat(s);
        if (via_table != via_reduced)
            throw std::logic_error("generalized_character: reduced form mismatch");
        f.by_marked_class[c] = via_table;
    }
    return f;
}

std::vector<std::vector<long long>> induced_rep_character(const HnPair& pair) {
    std::vector<std::vector<long long>> pi(pair.g_classes.size(),
                                           std::vector<long long>(pair.k_classes.size(), 0));
    for (size_t c = 0; c < pair.g_classes.size(); ++c) {
        const Permutation& grep = pair.g_class_rep(c);
        for (size_t d = 0; d < pair.k_classes.size(); ++d) {
            Permutation target = embed_h(pair.k_class_rep(d), pair.n);
            long long count = 0;
            for (const auto& a : pair.g.elements())
                if (conjugate(grep, inverse(a)) == target) ++count;   // a^{-1} g a = emb(k)
            pi[c][d] = count;
        }
    }
    return pi;
}

std::vector<std::vector<long long>> induced_rep_character_direct(const HnPair& pair,
                                                                 long long max_order) {
    const long long product_order =
        static_cast<long long>(pair.g.order()) * static_cast<long long>(pair.k.order());
    if (product_order > max_order)
        throw std::invalid_argument("induced_rep_character_direct: |G x K| = " +
                                    std::to_string(product_order) + " exceeds the cap of " +
                                    std::to_string(max_order));
    GroupTable prod = direct_product(pair.g, pair.k);
    IndexSet diag;
    diag.reserve(pair.k.order());
    for (size_t i = 0; i < pair.k.order(); ++i)
        diag.push_back(prod.index_of(disjoint_union(pair.k_embedded[i], pair.k.element(i))));
    std::sort(diag.begin(), diag.end());

    // left cosets x diag(K): canonical key = min index over right multiplications
    std::vector<uint32_t> coset_key(prod.order());
    for (uint32_t x = 0; x < prod.order(); ++x) {
        uint32_t best = UINT32_MAX;
        for (uint32_t d : diag) best = std::min(best, prod.mul(x, d));
        coset_key[x] = best;
    }
    IndexSet reps;   // one representative per coset
    for (uint32_t x = 0; x < prod.order(); ++x)
        if (coset_key[x] == x) reps.push_back(x);

    std::vector<std::vector<long long>> pi(pair.g_classes.size(),
                                           std::vector<long long>(pair.k_classes.size(), 0));
    for (size_t c = 0; c < pair.g_classes.size(); ++c) {
        for (size_t d = 0; d < pair.k_classes.size(); ++d) {
            uint32_t actor = prod.index_of(
                disjoint_union(pair.g_class_rep(c), pair.k_class_rep(d)));
            long long fixed = 0;
            for (uint32_t rep : reps)
                if (coset_key[prod.mul(actor, rep)] == rep) ++fixed;
            pi[c][d] = fixed;
        }
    }
    return pi;
}

std::vector<std::vector<long long>> decompose_induced(
    const HnPair& pair, const std::vector<std::vector<long long>>& pi) {
    const long long gk = static_cast<long long>(pair.g.order()) *
                         static_cast<long long>(pair.k.order());
    std::vector<std::vector<long long>> mult(pair.gt.size(),
                                             std::vector<long long>(pair.kt.size(), 0));
    for (size_t r = 0; r < pair.gt.size(); ++r) {
        for (size_t s = 0; s < pair.kt.size(); ++s) {
            long long acc = 0;
            for (size_t c = 0; c < pair.g_classes.size(); ++c)
                for (size_t d = 0; d < pair.k_classes.size(); ++d)
                    acc += pair.gt.class_sizes[c] * pair.kt.class_sizes[d] * pi[c][d] *
                           pair.gt.value(r, c) * pair.kt.value(s, d);
            Rat m(acc, gk);
            if (!is_integral(m) || m < Rat(0))
                throw std::logic_error("decompose_induced: multiplicity not a nonnegative integer");
            mult[r][s] = m.numerator();
        }
    }
    return mult;
}

Rat functional_equation_average(const HnPair& pair, const SphericalFunction& f,
                                const Permutation& x1, const Permutation& x2,
                                const Permutation& y1, const Permutation& y2) {
    Rat acc(0);
    for (size_t i = 0; i < pair.k.order(); ++i) {
        Permutation left = compose(compose(x1, pair.k_embedded[i]), y1);
        Permutation right = compose(compose(x2, pair.k.element(i)), y2);
        acc += f.eval(pair, left, right);
    }
    return acc / Rat(static_cast<long long>(pair.k.order()));
}

}   // namespace hgp
