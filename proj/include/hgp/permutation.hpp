#pragma once

// Permutations of [m] in one-line form (1-based), cycle decomposition, and
// cycle-notation parsing/printing. Composition is right-to-left:
// compose(a,b) maps x to a(b(x)).

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hgp {

class Permutation {
public:
    Permutation() = default;   // degree 0
    explicit Permutation(std::vector<int> images);   // validated bijection of [m]
    static Permutation identity(int degree);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int point) const { return images_[point - 1]; }
    const std::vector<int>& images() const { return images_; }
    bool is_identity() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

// Lexicographic on (degree, images); the identity is minimal for its degree.
bool operator<(const Permutation& a, const Permutation& b);

Permutation compose(const Permutation& a, const Permutation& b);   // x -> a(b(x))
Permutation inverse(const Permutation& p);
// a p a^{-1}
Permutation conjugate(const Permutation& p, const Permutation& a);

// Distinct points of one cycle; points[0] is the minimum.
struct Cycle {
    std::vector<int> points;

    int length() const { return static_cast<int>(points.size()); }
    friend bool operator==(const Cycle&, const Cycle&) = default;
    friend bool operator<(const Cycle& a, const Cycle& b) { return a.points < b.points; }
};

// Disjoint cycles covering all of [m], 1-cycles included, sorted by minimum.
std::vector<Cycle> cycle_decomposition(const Permutation& p);

Permutation permutation_from_cycles(int degree, const std::vector<Cycle>& cycles);

// "(1,14,3)(2,13,4)(7)" with commas; parsing also accepts spaces as separators.
std::string cycle_string(const Permutation& p);
std::vector<Cycle> parse_cycles(std::string_view text);
Permutation parse_permutation(int degree, std::string_view cycles_text);

// Nibble-packed one-line form; requires degree <= 16.
uint64_t pack_images(const Permutation& p);

}   // namespace hgp
