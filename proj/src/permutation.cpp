#include "hgp/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hgp {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int m = degree();
    std::vector<char> seen(m, 0);
    for (int v : images_) {
        if (v < 1 || v > m || seen[v - 1])
            throw std::invalid_argument("images are not a bijection of [m]");
        seen[v - 1] = 1;
    }
}

Permutation Permutation::identity(int degree) {
    std::vector<int> im(degree);
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (images_[i] != i + 1) return false;
    return true;
}

bool operator<(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.images() < b.images();
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("compose: degree mismatch");
    std::vector<int> im(a.degree());
    for (int x = 1; x <= a.degree(); ++x) im[x - 1] = a(b(x));
    return Permutation(std::move(im));
}

Permutation inverse(const Permutation& p) {
    std::vector<int> im(p.degree());
    for (int x = 1; x <= p.degree(); ++x) im[p(x) - 1] = x;
    return Permutation(std::move(im));
}

Permutation conjugate(const Permutation& p, const Permutation& a) {
    if (p.degree() != a.degree()) throw std::invalid_argument("conjugate: degree mismatch");
    // (a p a^{-1})(a(x)) = a(p(x))
    std::vector<int> im(p.degree());
    for (int x = 1; x <= p.degree(); ++x) im[a(x) - 1] = a(p(x));
    return Permutation(std::move(im));
}

std::vector<Cycle> cycle_decomposition(const Permutation& p) {
    std::vector<Cycle> cycles;
    std::vector<char> seen(p.degree(), 0);
    for (int start = 1; start <= p.degree(); ++start) {
        if (seen[start - 1]) continue;
        Cycle c;
        int x = start;
        do {
            seen[x - 1] = 1;
            c.points.push_back(x);
            x = p(x);
        } while (x != start);
        cycles.push_back(std::move(c));
    }
    return cycles;   // start points scanned in increasing order, so sorted by minimum
}

Permutation permutation_from_cycles(int degree, const std::vector<Cycle>& cycles) {
    std::vector<int> im(degree);
    std::iota(im.begin(), im.end(), 1);
    std::vector<char> used(degree, 0);
    for (const auto& c : cycles) {
        for (size_t i = 0; i < c.points.size(); ++i) {
            int from = c.points[i];
            int to = c.points[(i + 1) % c.points.size()];
            if (from < 1 || from > degree)
                throw std::invalid_argument("cycle point out of range");
            if (used[from - 1]) throw std::invalid_argument("cycles are not disjoint");
            used[from - 1] = 1;
            im[from - 1] = to;
        }
    }
    return Permutation(std::move(im));
}

std::string cycle_string(const Permutation& p) {
    std::ostringstream os;
    for (const auto& c : cycle_decomposition(p)) {
        os << '(';
        for (size_t i = 0; i < c.points.size(); ++i) {
            if (i) os << ',';
            os << c.points[i];
        }
        os << ')';
    }
    if (p.degree() == 0) os << "()";
    return os.str();
}

std::vector<Cycle> parse_cycles(std::string_view text) {
    std::vector<Cycle> cycles;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle notation");
        ++i;
        Cycle c;
        skip_ws();
        while (i < text.size() && text[i] != ')') {
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw std::invalid_argument("expected point in cycle notation");
            int v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                v = v * 10 + (text[i++] - '0');
            c.points.push_back(v);
            skip_ws();
            if (i < text.size() && (text[i] == ',' || text[i] == ';')) ++i;
            skip_ws();
        }
        if (i >= text.size()) throw std::invalid_argument("unterminated cycle");
        ++i;   // ')'
        if (!c.points.empty()) {
            // rotate so the minimum leads
            auto mn = std::min_element(c.points.begin(), c.points.end());
            std::rotate(c.points.begin(), mn, c.points.end());
            cycles.push_back(std::move(c));
        }
        skip_ws();
    }
    std::sort(cycles.begin(), cycles.end(),
              [](const Cycle& a, const Cycle& b) { return a.points[0] < b.points[0]; });
    return cycles;
}

Permutation parse_permutation(int degree, std::string_view cycles_text) {
    return permutation_from_cycles(degree, parse_cycles(cycles_text));
}

uint64_t pack_images(const Permutation& p) {
    if (p.degree() > 16) throw std::invalid_argument("pack_images: degree exceeds 16");
    uint64_t key = 0;
    const auto& im = p.images();
    for (int i = 0; i < p.degree(); ++i)
        key |= static_cast<uint64_t>(im[i] - 1) << (4 * i);
    return key;
}

}   // namespace hgp
