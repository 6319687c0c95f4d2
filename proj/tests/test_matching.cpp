#include "doctest.h"
#include "fixtures.hpp"

#include "ndsolve/matching.hpp"

using namespace ndsolve;
using namespace ndsolve::testing;

namespace {

int exhaustive_matching(int left, int right, const std::vector<std::pair<int, int>>& edges)
{
    std::vector<char> used(static_cast<std::size_t>(right), 0);
    std::function<int(int)> best = [&](int l) -> int {
        if (l == left)
            return 0;
        int result = best(l + 1);
        for (auto [a, b] : edges)
            if (a == l && !used[b]) {
                used[b] = 1;
                result = std::max(result, 1 + best(l + 1));
                used[b] = 0;
            }
        return result;
    };
    return best(0);
}

void check_consistent(const Matching& m, const std::vector<std::pair<int, int>>& edges)
{
    int count = 0;
    for (std::size_t l = 0; l < m.mate_of_left.size(); ++l) {
        const int r = m.mate_of_left[l];
        if (r < 0)
            continue;
        ++count;
        CHECK(m.mate_of_right[r] == static_cast<int>(l));
        CHECK(std::find(edges.begin(), edges.end(), std::pair<int, int>{static_cast<int>(l), r}) != edges.end());
    }
    CHECK(count == m.size);
}

}  // namespace

TEST_CASE("complete 2x2 has a perfect matching")
{
    std::vector<std::pair<int, int>> edges{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    auto m = max_bipartite_matching(2, 2, edges);
    CHECK(m.size == 2);
    check_consistent(m, edges);
}

TEST_CASE("star matches once")
{
    std::vector<std::pair<int, int>> edges{{0, 0}, {0, 1}, {0, 2}};
    CHECK(max_bipartite_matching(1, 3, edges).size == 1);
}

TEST_CASE("augmenting paths are found")
{
    // Greedy 0-0 blocks 1; the maximum reroutes 0 to 1.
    std::vector<std::pair<int, int>> edges{{0, 0}, {0, 1}, {1, 0}};
    CHECK(max_bipartite_matching(2, 2, edges).size == 2);
}

TEST_CASE("empty sides and bad edges")
{
    CHECK(max_bipartite_matching(0, 3, {}).size == 0);
    std::vector<std::pair<int, int>> bad{{0, 5}};
    CHECK_THROWS_AS(max_bipartite_matching(1, 2, bad), std::out_of_range);
}

TEST_CASE("random bipartite graphs match the exhaustive maximum")
{
    std::mt19937_64 rng(12);
    for (int i = 0; i < 100; ++i) {
        const int left = static_cast<int>(uniform_int(rng, 0, 12));
        const int right = static_cast<int>(uniform_int(rng, 0, 12));
        const double p = static_cast<double>(uniform_int(rng, 5, 40)) / 100.0;
        std::vector<std::pair<int, int>> edges;
        for (int l = 0; l < left; ++l)
            for (int r = 0; r < right; ++r)
                if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p)
                    edges.emplace_back(l, r);
        auto m = max_bipartite_matching(left, right, edges);
        CHECK(m.size == exhaustive_matching(left, right, edges));
        check_consistent(m, edges);
    }
}
