#include "hgp/partition.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hgp {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

bool Partition::has_part(int value) const {
    return std::find(parts_.begin(), parts_.end(), value) != parts_.end();
}

std::vector<int> Partition::distinct_parts() const {
    std::vector<int> out;
    for (int p : parts_)
        if (out.empty() || out.back() != p) out.push_back(p);
    return out;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

bool operator<(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.parts() > b.parts();   // lex-greater part list comes first
}

std::string Bipartition::to_string() const {
    return "(" + first.to_string() + "," + second.to_string() + ")";
}

bool operator<(const Bipartition& a, const Bipartition& b) {
    if (a.first.size() != b.first.size()) return a.first.size() > b.first.size();
    if (!(a.first == b.first)) return a.first < b.first;
    return a.second < b.second;
}

void MarkedBipartition::validate() const {
    const Partition& comp = component == MarkComponent::First ? base.first : base.second;
    if (!comp.has_part(part))
        throw std::invalid_argument("marked part " + std::to_string(part) +
                                    " does not occur in component " +
                                    std::to_string(static_cast<int>(component)) + " of " +
                                    base.to_string());
}

std::string MarkedBipartition::to_string() const {
    std::string tag = "^" + std::to_string(part);
    if (component == MarkComponent::First)
        return "(" + base.first.to_string() + tag + "," + base.second.to_string() + ")";
    return "(" + base.first.to_string() + "," + base.second.to_string() + tag + ")";
}

bool operator<(const MarkedBipartition& a, const MarkedBipartition& b) {
    if (!(a.base == b.base)) return a.base < b.base;
    if (a.component != b.component) return a.component < b.component;
    return a.part < b.part;
}

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    // first part descending gives graded reverse-lexicographic order directly
    std::function<void(int, int)> gen = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(max_part, remaining); p >= 1; --p) {
            cur.push_back(p);
            gen(remaining - p, p);
            cur.pop_back();
        }
    };
    gen(n, n);
    return out;
}

std::vector<Bipartition> enumerate_bipartitions(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_bipartitions: n must be >= 0");
    std::vector<Bipartition> out;
    for (int k = n; k >= 0; --k) {
        auto firsts = enumerate_partitions(k);
        auto seconds = enumerate_partitions(n - k);
        for (const auto& f : firsts)
            for (const auto& s : seconds) out.push_back(Bipartition{f, s});
    }
    return out;
}

std::vector<MarkedBipartition> enumerate_marked_bipartitions(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_marked_bipartitions: n must be >= 1");
    std::vector<MarkedBipartition> out;
    for (const auto& bp : enumerate_bipartitions(n)) {
        for (MarkComponent c : {MarkComponent::First, MarkComponent::Second}) {
            const Partition& comp = c == MarkComponent::First ? bp.first : bp.second;
            auto values = comp.distinct_parts();
            std::sort(values.begin(), values.end());   // mark part value ascending
            for (int v : values) out.push_back(MarkedBipartition{bp, c, v});
        }
    }
    return out;
}

std::vector<int> exterior_corners(const Partition& p) {
    std::vector<int> rows;
    const auto& parts = p.parts();
    for (size_t i = 0; i < parts.size(); ++i)
        if (i == 0 || parts[i] < parts[i - 1]) rows.push_back(static_cast<int>(i) + 1);
    rows.push_back(p.length() + 1);   // new bottom row
    return rows;
}

bool partition_covers(const Partition& mu, const Partition& lambda) {
    if (lambda.size() != mu.size() + 1) return false;
    if (lambda.length() < mu.length() || lambda.length() > mu.length() + 1) return false;
    int grown = 0;
    for (int i = 0; i < lambda.length(); ++i) {
        int m = i < mu.length() ? mu.parts()[i] : 0;
        int l = lambda.parts()[i];
        if (l == m + 1)
            ++grown;
        else if (l != m)
            return false;
    }
    return grown == 1;
}

bool covers(const Bipartition& mu, const Bipartition& lambda) {
    return (partition_covers(mu.first, lambda.first) && mu.second == lambda.second) ||
           (mu.first == lambda.first && partition_covers(mu.second, lambda.second));
}

Partition union_parts(const Partition& a, const Partition& b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    std::sort(parts.rbegin(), parts.rend());
    return Partition(parts);
}

long long z_factor(const Partition& p) {
    long long z = 1;
    int run_value = 0, run_count = 0;
    auto flush = [&] {
        for (int j = 1; j <= run_count; ++j) z *= static_cast<long long>(run_value) * j;
    };
    for (int v : p.parts()) {
        if (v == run_value) {
            ++run_count;
        } else {
            flush();
            run_value = v;
            run_count = 1;
        }
    }
    flush();
    return z;
}

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}   // namespace hgp
