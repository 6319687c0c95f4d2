#include "ndsolve/matching.hpp"

#include <limits>
#include <queue>
#include <stdexcept>

namespace ndsolve {

namespace {

class HopcroftKarp {
public:
    HopcroftKarp(int left, int right, std::span<const std::pair<int, int>> edges)
        : adjacency_(static_cast<std::size_t>(left)), layer_(static_cast<std::size_t>(left)),
          cursor_(static_cast<std::size_t>(left))
    {
        result_.mate_of_left.assign(static_cast<std::size_t>(left), -1);
        result_.mate_of_right.assign(static_cast<std::size_t>(right), -1);
        for (auto [l, r] : edges) {
            if (l < 0 || l >= left || r < 0 || r >= right)
                throw std::out_of_range("matching edge endpoint out of range");
            adjacency_[l].push_back(r);
        }
    }

    Matching run()
    {
        while (build_layers())
            for (int l = 0; l < static_cast<int>(adjacency_.size()); ++l)
                if (result_.mate_of_left[l] < 0 && augment(l))
                    ++result_.size;
        return std::move(result_);
    }

private:
    static constexpr int unreached = std::numeric_limits<int>::max();

    bool build_layers()
    {
        std::queue<int> queue;
        for (std::size_t l = 0; l < adjacency_.size(); ++l) {
            cursor_[l] = 0;
            if (result_.mate_of_left[l] < 0) {
                layer_[l] = 0;
                queue.push(static_cast<int>(l));
            } else {
                layer_[l] = unreached;
            }
        }
        bool found_free = false;
        while (!queue.empty()) {
            const int l = queue.front();
            queue.pop();
            for (int r : adjacency_[l]) {
                const int next = result_.mate_of_right[r];
                if (next < 0)
                    found_free = true;
                else if (layer_[next] == unreached) {
                    layer_[next] = layer_[l] + 1;
                    queue.push(next);
                }
            }
        }
        return found_free;
    }

    bool augment(int l)
    {
        for (auto& i = cursor_[l]; i < adjacency_[l].size(); ++i) {
            const int r = adjacency_[l][i];
            const int next = result_.mate_of_right[r];
            if (next < 0 || (layer_[next] == layer_[l] + 1 && augment(next))) {
                result_.mate_of_left[l] = r;
                result_.mate_of_right[r] = l;
                ++i;
                return true;
            }
        }
        layer_[l] = unreached;
        return false;
    }

    std::vector<std::vector<int>> adjacency_;
    std::vector<int> layer_;
    std::vector<std::size_t> cursor_;
    Matching result_;
};

}  // namespace

Matching max_bipartite_matching(int left, int right, std::span<const std::pair<int, int>> edges)
{
    if (left < 0 || right < 0)
        throw std::invalid_argument("negative side size");
    return HopcroftKarp(left, right, edges).run();
}

}  // namespace ndsolve
