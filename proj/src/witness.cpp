#include "ndsolve/witness.hpp"

#include "ndsolve/nd.hpp"

#include <algorithm>
#include <map>

namespace ndsolve {

std::string check_witness(const MotifInstance& instance, const MotifWitness& witness)
{
    const auto& g = instance.graph;
    auto vertices = witness.vertices;
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        return "repeated vertex";
    for (Vertex v : vertices)
        if (v < 0 || v >= g.num_vertices())
            return "vertex out of range";
    std::map<Color, int> colors;
    for (Vertex v : vertices)
        ++colors[instance.vertex_color[v]];
    if (colors != instance.motif)
        return "color multiset differs from the motif";
    if (!induces_connected(g, vertices))
        return "vertex set is not connected";
    return {};
}

std::string check_witness(const PathsInstance& instance, const PathsWitness& witness, bool require_simple)
{
    const auto& g = instance.graph;
    if (witness.paths.size() != instance.pairs.size())
        return "path count differs from pair count";
    std::vector<char> used(static_cast<std::size_t>(g.num_vertices()), 0);
    std::optional<TypePartition> types;
    if (require_simple)
        types = compute_type_partition(g);
    for (std::size_t i = 0; i < witness.paths.size(); ++i) {
        const auto& path = witness.paths[i];
        const auto label = "path " + std::to_string(i + 1) + ": ";
        if (path.size() < 2 || path.front() != instance.pairs[i].first || path.back() != instance.pairs[i].second)
            return label + "wrong endpoints";
        for (std::size_t j = 0; j < path.size(); ++j) {
            const Vertex v = path[j];
            if (v < 0 || v >= g.num_vertices())
                return label + "vertex out of range";
            if (used[v])
                return label + "vertex " + std::to_string(v + 1) + " used twice";
            used[v] = 1;
            if (j > 0 && !g.adjacent(path[j - 1], v))
                return label + "consecutive vertices not adjacent";
        }
        if (types) {
            std::vector<TypeId> internal;
            for (std::size_t j = 1; j + 1 < path.size(); ++j)
                internal.push_back(types->type_of[path[j]]);
            std::sort(internal.begin(), internal.end());
            if (std::adjacent_find(internal.begin(), internal.end()) != internal.end())
                return label + "two internal vertices of one type";
        }
    }
    return {};
}

std::string check_witness(const PrecolorInstance& instance, const ColoringWitness& witness)
{
    const auto& g = instance.graph;
    if (static_cast<Vertex>(witness.color_of.size()) != g.num_vertices())
        return "coloring is not total";
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        const Color c = witness.color_of[v];
        if (c < 1 || c > instance.num_colors)
            return "vertex " + std::to_string(v + 1) + " color outside 1..r";
        if (instance.precolor[v] && *instance.precolor[v] != c)
            return "vertex " + std::to_string(v + 1) + " changes its precolor";
        for (Vertex u : g.neighbors(v))
            if (witness.color_of[u] == c)
                return "edge " + std::to_string(v + 1) + "-" + std::to_string(u + 1) + " is monochromatic";
    }
    return {};
}

}  // namespace ndsolve
