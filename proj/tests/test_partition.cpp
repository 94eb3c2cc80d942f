#include <doctest.h>

#include <stdexcept>
#include <map>
#include <set>
#include <vector>

#include "hgp/partition.hpp"

using namespace hgp;

namespace {

// Independent count of partitions of n: DP over largest allowed part.
long long partition_count(int n) {
    std::vector<std::vector<long long>> p(n + 1, std::vector<long long>(n + 1, 0));
    for (int k = 0; k <= n; ++k) p[0][k] = 1;
    for (int m = 1; m <= n; ++m)
        for (int k = 1; k <= n; ++k)
            p[m][k] = p[m][k - 1] + (m >= k ? p[m - k][k] : 0);
    return p[n][n];
}

}   // namespace

TEST_CASE("enumerate_partitions basics") {
    auto p0 = enumerate_partitions(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].empty());

    CHECK(enumerate_partitions(4).size() == 5);

    auto p13 = enumerate_partitions(13);
    Partition target({5, 3, 3, 1, 1});
    CHECK(std::find(p13.begin(), p13.end(), target) != p13.end());
}

TEST_CASE("enumerations are duplicate-free, total, and canonically ordered") {
    for (int n = 0; n <= 10; ++n) {
        auto ps = enumerate_partitions(n);
        CHECK(static_cast<long long>(ps.size()) == partition_count(n));
        std::set<std::vector<int>> seen;
        for (const auto& p : ps) {
            CHECK(p.size() == n);
            seen.insert(p.parts());
        }
        CHECK(seen.size() == ps.size());
        for (size_t i = 0; i + 1 < ps.size(); ++i) CHECK(ps[i] < ps[i + 1]);
    }
    // graded reverse-lexicographic: (n) first, (1^n) last
    auto p5 = enumerate_partitions(5);
    CHECK(p5.front() == Partition({5}));
    CHECK(p5.back() == Partition({1, 1, 1, 1, 1}));
}

TEST_CASE("enumerate_bipartitions") {
    auto b1 = enumerate_bipartitions(1);
    REQUIRE(b1.size() == 2);
    CHECK(b1[0] == Bipartition{Partition({1}), Partition{}});
    CHECK(b1[1] == Bipartition{Partition{}, Partition({1})});

    CHECK(enumerate_bipartitions(2).size() == 5);

    auto b8 = enumerate_bipartitions(8);
    Bipartition target{Partition({3, 2, 1}), Partition({2})};
    CHECK(std::find(b8.begin(), b8.end(), target) != b8.end());

    // second algorithm: cross-count as sum of p(k) p(n-k)
    for (int n = 0; n <= 10; ++n) {
        long long total = 0;
        for (int k = 0; k <= n; ++k) total += partition_count(k) * partition_count(n - k);
        CHECK(static_cast<long long>(enumerate_bipartitions(n).size()) == total);
    }
}

TEST_CASE("enumerate_marked_bipartitions counts") {
    CHECK(enumerate_marked_bipartitions(1).size() == 2);
    CHECK(enumerate_marked_bipartitions(2).size() == 6);
    CHECK(enumerate_marked_bipartitions(3).size() == 16);
    for (int n = 1; n <= 8; ++n) {
        auto ms = enumerate_marked_bipartitions(n);
        std::set<std::pair<std::pair<std::vector<int>, std::vector<int>>, std::pair<int, int>>>
            seen;
        for (const auto& m : ms) {
            m.validate();
            seen.insert({{m.base.first.parts(), m.base.second.parts()},
                         {static_cast<int>(m.component), m.part}});
        }
        CHECK(seen.size() == ms.size());
        for (size_t i = 0; i + 1 < ms.size(); ++i) CHECK(ms[i] < ms[i + 1]);
    }
}

TEST_CASE("exterior corners") {
    CHECK(exterior_corners(Partition({5, 3, 3, 1, 1})) == std::vector<int>{1, 2, 4, 6});
    CHECK(exterior_corners(Partition{}) == std::vector<int>{1});
    for (int n = 1; n <= 6; ++n)
        CHECK(exterior_corners(Partition({n})).size() == 2);

    // corner count = distinct part values + 1
    for (int n = 0; n <= 15; ++n)
        for (const auto& p : enumerate_partitions(n))
            CHECK(exterior_corners(p).size() == p.distinct_parts().size() + 1);
}

TEST_CASE("covers relation") {
    Bipartition one_e{Partition({1}), Partition{}};
    CHECK(covers(one_e, Bipartition{Partition({2}), Partition{}}));
    CHECK(covers(one_e, Bipartition{Partition({1}), Partition({1})}));
    CHECK_FALSE(covers(Bipartition{Partition({1}), Partition({1})},
                       Bipartition{Partition({3}), Partition{}}));

    for (int n = 1; n <= 7; ++n) {
        auto smaller = enumerate_bipartitions(n - 1);
        auto larger = enumerate_bipartitions(n);
        for (const auto& s : smaller)
            for (const auto& l : larger)
                if (covers(s, l)) CHECK(l.size() == s.size() + 1);
    }
}

TEST_CASE("marks biject with removable corners") {
    // |marked bipartitions of n| = sum over rho |- n of #{sigma |- n-1 : sigma -> rho}
    for (int n = 1; n <= 10; ++n) {
        long long covering_pairs = 0;
        auto smaller = enumerate_bipartitions(n - 1);
        for (const auto& rho : enumerate_bipartitions(n))
            for (const auto& sigma : smaller)
                if (covers(sigma, rho)) ++covering_pairs;
        CHECK(static_cast<long long>(enumerate_marked_bipartitions(n).size()) == covering_pairs);
    }
}

TEST_CASE("marks designate part values, not occurrences") {
    // (2,2): one markable value in the first component
    Bipartition b{Partition({2, 2}), Partition{}};
    int count = 0;
    for (const auto& m : enumerate_marked_bipartitions(4))
        if (m.base == b) ++count;
    CHECK(count == 1);

    CHECK_THROWS_AS((MarkedBipartition{b, MarkComponent::First, 3}.validate()),
                    std::invalid_argument);
    CHECK_THROWS_AS((MarkedBipartition{b, MarkComponent::Second, 2}.validate()),
                    std::invalid_argument);
}

TEST_CASE("partition validation and helpers") {
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK(Partition({3, 2, 1}).to_string() == "(3,2,1)");
    CHECK(union_parts(Partition({3, 1}), Partition({2, 1})) == Partition({3, 2, 1, 1}));
    CHECK(z_factor(Partition({2, 1, 1})) == 4);       // 2 * (1^2 * 2!)
    CHECK(z_factor(Partition({3, 3, 2})) == 36);      // (3^2 * 2!) * 2
    CHECK(factorial(6) == 720);
    CHECK(binomial(5, 2) == 10);
}
