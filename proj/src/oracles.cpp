#include "ndsolve/oracles.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <unordered_set>

namespace ndsolve {

OracleResult<MotifWitness> oracle_motif(const MotifInstance& instance)
{
    const Vertex n = instance.graph.num_vertices();
    if (n > oracle_motif_max_vertices)
        throw OracleSizeGuard("motif oracle limited to " + std::to_string(oracle_motif_max_vertices) + " vertices");
    validate(instance);
    const int size = instance.motif_size();
    OracleResult<MotifWitness> result;
    if (size > n)
        return result;
    for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
        if (std::popcount(subset) != size)
            continue;
        std::vector<Vertex> vertices;
        std::map<Color, int> colors;
        for (Vertex v = 0; v < n; ++v)
            if (subset >> v & 1) {
                vertices.push_back(v);
                ++colors[instance.vertex_color[v]];
            }
        if (colors == instance.motif && induces_connected(instance.graph, vertices)) {
            result.answer = true;
            result.witness = MotifWitness{std::move(vertices)};
            return result;
        }
    }
    return result;
}

namespace {

class PathsBacktracker {
public:
    explicit PathsBacktracker(const PathsInstance& instance)
        : g_(instance.graph), pairs_(instance.pairs), blocked_(static_cast<std::size_t>(g_.num_vertices()), 0)
    {
        for (auto [s, t] : pairs_)
            blocked_[s] = blocked_[t] = 1;
    }

    std::optional<PathsWitness> run()
    {
        if (route(0))
            return PathsWitness{paths_};
        return std::nullopt;
    }

private:
    std::uint32_t used_mask() const
    {
        std::uint32_t mask = 0;
        for (Vertex v = 0; v < g_.num_vertices(); ++v)
            if (blocked_[v])
                mask |= 1u << v;
        return mask;
    }

    bool route(std::size_t pair)
    {
        if (pair == pairs_.size())
            return true;
        // Failure depends only on which pair comes next and which vertices are taken.
        const auto key = (static_cast<std::uint64_t>(pair) << 32) | used_mask();
        if (failed_.count(key))
            return false;
        auto [s, t] = pairs_[pair];
        std::vector<Vertex> path{s};
        if (extend(pair, path, t))
            return true;
        failed_.insert(key);
        return false;
    }

    bool extend(std::size_t pair, std::vector<Vertex>& path, Vertex target)
    {
        const Vertex at = path.back();
        for (Vertex next : g_.neighbors(at)) {
            if (next == target) {
                path.push_back(target);
                paths_.push_back(path);
                if (route(pair + 1))
                    return true;
                paths_.pop_back();
                path.pop_back();
                continue;
            }
            if (blocked_[next])
                continue;
            blocked_[next] = 1;
            path.push_back(next);
            if (extend(pair, path, target))
                return true;
            path.pop_back();
            blocked_[next] = 0;
        }
        return false;
    }

    const Graph& g_;
    const std::vector<Edge>& pairs_;
    std::vector<char> blocked_;
    std::vector<std::vector<Vertex>> paths_;
    std::unordered_set<std::uint64_t> failed_;
};

}  // namespace

OracleResult<PathsWitness> oracle_paths(const PathsInstance& instance)
{
    if (instance.graph.num_vertices() > oracle_paths_max_vertices || instance.pairs.size() > oracle_paths_max_pairs)
        throw OracleSizeGuard("paths oracle limited to " + std::to_string(oracle_paths_max_vertices) +
                              " vertices and " + std::to_string(oracle_paths_max_pairs) + " pairs");
    validate(instance);
    OracleResult<PathsWitness> result;
    result.witness = PathsBacktracker(instance).run();
    result.answer = result.witness.has_value();
    return result;
}

namespace {

class ColoringBacktracker {
public:
    ColoringBacktracker(const PrecolorInstance& instance, std::vector<Color> palette)
        : g_(instance.graph), palette_(std::move(palette))
    {
        color_.assign(static_cast<std::size_t>(g_.num_vertices()), 0);
        for (Vertex v = 0; v < g_.num_vertices(); ++v) {
            if (instance.precolor[v])
                color_[v] = *instance.precolor[v];
            else
                open_.push_back(v);
        }
    }

    std::optional<ColoringWitness> run()
    {
        if (assign(0))
            return ColoringWitness{color_};
        return std::nullopt;
    }

private:
    bool assign(std::size_t i)
    {
        if (i == open_.size())
            return true;
        const Vertex v = open_[i];
        for (Color c : palette_) {
            bool clash = false;
            for (Vertex u : g_.neighbors(v))
                if (color_[u] == c) {
                    clash = true;
                    break;
                }
            if (clash)
                continue;
            color_[v] = c;
            if (assign(i + 1))
                return true;
        }
        color_[v] = 0;
        return false;
    }

    const Graph& g_;
    std::vector<Color> palette_;
    std::vector<Color> color_;
    std::vector<Vertex> open_;
};

}  // namespace

OracleResult<ColoringWitness> oracle_precolor(const PrecolorInstance& instance)
{
    if (instance.graph.num_vertices() > oracle_precolor_max_vertices)
        throw OracleSizeGuard("precolor oracle limited to " + std::to_string(oracle_precolor_max_vertices) +
                              " vertices");
    validate(instance);
    std::set<Color> palette;
    std::size_t uncolored = 0;
    for (const auto& c : instance.precolor) {
        if (c)
            palette.insert(*c);
        else
            ++uncolored;
    }
    const std::set<Color> precolored = palette;
    // Fresh colors are interchangeable, so more than one per uncolored vertex never helps.
    for (Color c = 1; c <= instance.num_colors && uncolored > 0; ++c)
        if (!precolored.count(c)) {
            palette.insert(c);
            --uncolored;
        }
    OracleResult<ColoringWitness> result;
    result.witness = ColoringBacktracker(instance, {palette.begin(), palette.end()}).run();
    result.answer = result.witness.has_value();
    return result;
}

}  // namespace ndsolve
