#include "hgp/group_table.hpp"

#include <algorithm>
#include <stdexcept>

namespace hgp {

GroupTable GroupTable::from_elements(std::vector<Permutation> elements) {
    if (elements.empty()) throw std::invalid_argument("group table needs at least one element");
    GroupTable t;
    t.degree_ = elements.front().degree();
    if (t.degree_ > 16) throw std::invalid_argument("group table degree exceeds 16");
    for (const auto& e : elements)
        if (e.degree() != t.degree_) throw std::invalid_argument("mixed degrees in group table");
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    t.elements_ = std::move(elements);

    t.index_.reserve(t.elements_.size() * 2);
    for (uint32_t i = 0; i < t.elements_.size(); ++i)
        t.index_.emplace(pack_images(t.elements_[i]), i);

    t.identity_ = t.index_of(Permutation::identity(t.degree_));
    t.inverses_.resize(t.elements_.size());
    for (uint32_t i = 0; i < t.elements_.size(); ++i)
        t.inverses_[i] = t.index_of(inverse(t.elements_[i]));
    return t;
}

std::optional<uint32_t> GroupTable::find(const Permutation& p) const {
    if (p.degree() != degree_) return std::nullopt;
    return find_packed(pack_images(p));
}

std::optional<uint32_t> GroupTable::find_packed(uint64_t key) const {
    auto it = index_.find(key);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

uint32_t GroupTable::index_of(const Permutation& p) const {
    auto i = find(p);
    if (!i) throw std::out_of_range("element not in group table");
    return *i;
}

uint32_t GroupTable::mul(uint32_t a, uint32_t b) const {
    return index_of(compose(elements_[a], elements_[b]));
}

bool GroupTable::is_closed() const {
    for (uint32_t a = 0; a < order(); ++a)
        for (uint32_t b = 0; b < order(); ++b)
            if (!find(compose(elements_[a], elements_[b]))) return false;
    return true;
}

void require_subgroup(const GroupTable& g, const IndexSet& k) {
    if (k.empty()) throw std::invalid_argument("subgroup index set is empty");
    std::vector<char> member(g.order(), 0);
    for (uint32_t i : k) {
        if (i >= g.order()) throw std::invalid_argument("subgroup index out of range");
        member[i] = 1;
    }
    if (!member[g.identity_index()])
        throw std::invalid_argument("subgroup does not contain the identity");
    for (uint32_t a : k) {
        if (!member[g.inverse_index(a)])
            throw std::invalid_argument("subgroup not closed under inversion");
        for (uint32_t b : k)
            if (!member[g.mul(a, b)])
                throw std::invalid_argument("subgroup not closed under composition");
    }
}

Permutation disjoint_union(const Permutation& a, const Permutation& b) {
    std::vector<int> im;
    im.reserve(a.degree() + b.degree());
    for (int v : a.images()) im.push_back(v);
    for (int v : b.images()) im.push_back(v + a.degree());
    return Permutation(std::move(im));
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
    std::vector<Permutation> elems;
    elems.reserve(a.order() * b.order());
    for (const auto& x : a.elements())
        for (const auto& y : b.elements()) elems.push_back(disjoint_union(x, y));
    return GroupTable::from_elements(std::move(elems));
}

}   // namespace hgp
