#pragma once

#include <span>
#include <utility>
#include <vector>

namespace ndsolve {

struct Matching {
    int size = 0;
    std::vector<int> mate_of_left;    // -1 when unmatched
    std::vector<int> mate_of_right;
};

/// Maximum bipartite matching (Hopcroft–Karp, O(sqrt(V) E)). Edges are
/// (left, right) index pairs.
Matching max_bipartite_matching(int left, int right, std::span<const std::pair<int, int>> edges);

}  // namespace ndsolve
