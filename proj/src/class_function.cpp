#include "hgp/class_function.hpp"

#include <stdexcept>

namespace hgp {

ClassFunction zero_function(const GroupTable& g) {
    return ClassFunction{&g, std::vector<Rat>(g.order(), Rat(0))};
}

ClassFunction constant_function(const GroupTable& g, const Rat& c) {
    return ClassFunction{&g, std::vector<Rat>(g.order(), c)};
}

ClassFunction indicator(const GroupTable& g, const IndexSet& subset) {
    ClassFunction f = zero_function(g);
    for (uint32_t i : subset) f.values.at(i) = Rat(1);
    return f;
}

ClassFunction delta_at(const GroupTable& g, uint32_t index) {
    ClassFunction f = zero_function(g);
    f.values.at(index) = Rat(1);
    return f;
}

ClassFunction from_class_values(const GroupTable& g, const std::vector<IndexSet>& classes,
                                const std::vector<Rat>& per_class) {
    if (classes.size() != per_class.size())
        throw std::invalid_argument("from_class_values: size mismatch");
    ClassFunction f = zero_function(g);
    for (size_t c = 0; c < classes.size(); ++c)
        for (uint32_t i : classes[c]) f.values.at(i) = per_class[c];
    return f;
}

static void require_same_carrier(const ClassFunction& a, const ClassFunction& b) {
    if (a.carrier != b.carrier) throw std::invalid_argument("carrier mismatch");
}

ClassFunction add(const ClassFunction& a, const ClassFunction& b) {
    require_same_carrier(a, b);
    ClassFunction out = a;
    for (size_t i = 0; i < out.values.size(); ++i) out.values[i] += b.values[i];
    return out;
}

ClassFunction scale(const Rat& c, const ClassFunction& f) {
    ClassFunction out = f;
    for (auto& v : out.values) v *= c;
    return out;
}

ClassFunction convolve(const ClassFunction& f1, const ClassFunction& f2) {
    require_same_carrier(f1, f2);
    const GroupTable& g = *f1.carrier;
    ClassFunction out = zero_function(g);
    for (uint32_t x = 0; x < g.order(); ++x) {
        Rat acc(0);
        for (uint32_t h = 0; h < g.order(); ++h) {
            if (f2.values[h] == Rat(0)) continue;
            acc += f1.values[g.mul(x, g.inverse_index(h))] * f2.values[h];
        }
        out.values[x] = acc;
    }
    return out;
}

Rat inner_product(const ClassFunction& f1, const ClassFunction& f2) {
    require_same_carrier(f1, f2);
    Rat acc(0);
    for (size_t i = 0; i < f1.values.size(); ++i) acc += f1.values[i] * f2.values[i];
    return acc / Rat(static_cast<long long>(f1.values.size()));
}

Rat norm_sq_unnormalized(const ClassFunction& f) {
    Rat acc(0);
    for (const auto& v : f.values) acc += v * v;
    return acc;
}

}   // namespace hgp
