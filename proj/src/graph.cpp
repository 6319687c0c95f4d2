#include "ndsolve/graph.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <string>

namespace ndsolve {

Graph::Graph(Vertex n) : n_(n), offsets_(static_cast<std::size_t>(n) + 1, 0)
{
    if (n < 0)
        throw InvalidInstance("negative vertex count");
}

Graph Graph::from_edges(Vertex n, std::span<const Edge> edges)
{
    if (n < 0)
        throw InvalidInstance("negative vertex count");
    std::vector<std::vector<Vertex>> adjacency(static_cast<std::size_t>(n));
    for (const auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InvalidInstance("vertex id out of range in edge");
        if (u == v)
            throw InvalidInstance("self-loop on vertex " + std::to_string(u + 1));
        adjacency[u].push_back(v);
        adjacency[v].push_back(u);
    }
    for (Vertex v = 0; v < n; ++v) {
        auto& list = adjacency[v];
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end())
            throw InvalidInstance("duplicate edge at vertex " + std::to_string(v + 1));
    }
    return from_adjacency(std::move(adjacency));
}

Graph Graph::from_adjacency(std::vector<std::vector<Vertex>> adjacency)
{
    Graph g(static_cast<Vertex>(adjacency.size()));
    std::size_t total = 0;
    for (auto& list : adjacency) {
        std::sort(list.begin(), list.end());
        total += list.size();
    }
    g.neighbors_.reserve(total);
    for (std::size_t v = 0; v < adjacency.size(); ++v) {
        g.neighbors_.insert(g.neighbors_.end(), adjacency[v].begin(), adjacency[v].end());
        g.offsets_[v + 1] = g.neighbors_.size();
        std::vector<Vertex>().swap(adjacency[v]);
    }
#ifndef NDEBUG
    for (Vertex v = 0; v < g.n_; ++v)
        for (Vertex u : g.neighbors(v))
            assert(u != v && g.adjacent(u, v));
#endif
    return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const noexcept
{
    if (degree(u) > degree(v))
        std::swap(u, v);
    auto nbrs = neighbors(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> result;
    result.reserve(num_edges());
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : neighbors(u))
            if (u < v)
                result.emplace_back(u, v);
    return result;
}

Graph Graph::induced(std::span<const Vertex> keep) const
{
    std::vector<Vertex> position(static_cast<std::size_t>(n_), -1);
    for (std::size_t i = 0; i < keep.size(); ++i)
        position[keep[i]] = static_cast<Vertex>(i);
    std::vector<std::vector<Vertex>> adjacency(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (Vertex u : neighbors(keep[i]))
            if (position[u] >= 0)
                adjacency[i].push_back(position[u]);
    return from_adjacency(std::move(adjacency));
}

int MotifInstance::motif_size() const
{
    int total = 0;
    for (const auto& [color, count] : motif)
        total += count;
    return total;
}

void validate(const MotifInstance& instance)
{
    const auto n = instance.graph.num_vertices();
    if (static_cast<Vertex>(instance.vertex_color.size()) != n)
        throw InvalidInstance("every vertex needs exactly one color");
    for (Vertex v = 0; v < n; ++v)
        if (instance.vertex_color[v] < 1)
            throw InvalidInstance("vertex " + std::to_string(v + 1) + " has a non-positive color");
    if (instance.motif.empty())
        throw InvalidInstance("motif is empty");
    for (const auto& [color, count] : instance.motif) {
        if (color < 1)
            throw InvalidInstance("motif color must be positive");
        if (count < 1)
            throw InvalidInstance("motif multiplicity must be positive");
    }
}

void validate(const PathsInstance& instance)
{
    const auto n = instance.graph.num_vertices();
    std::set<Vertex> seen;
    for (const auto& [s, t] : instance.pairs) {
        if (s < 0 || t < 0 || s >= n || t >= n)
            throw InvalidInstance("terminal out of range");
        if (s == t)
            throw InvalidInstance("pair with identical endpoints");
        if (!seen.insert(s).second || !seen.insert(t).second)
            throw InvalidInstance("terminal vertices overlap");
    }
}

void validate(const PrecolorInstance& instance)
{
    const auto& g = instance.graph;
    if (instance.num_colors < 1)
        throw InvalidInstance("color budget must be positive");
    if (static_cast<Vertex>(instance.precolor.size()) != g.num_vertices())
        throw InvalidInstance("precolor map size does not match graph");
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        const auto& c = instance.precolor[v];
        if (!c)
            continue;
        if (*c < 1 || *c > instance.num_colors)
            throw InvalidInstance("precolor of vertex " + std::to_string(v + 1) + " outside 1..r");
        for (Vertex u : g.neighbors(v))
            if (instance.precolor[u] == c)
                throw InvalidInstance("improper precoloring on edge " + std::to_string(v + 1) +
                                      "-" + std::to_string(u + 1));
    }
}

bool induces_connected(const Graph& g, std::span<const Vertex> vertices)
{
    if (vertices.empty())
        return false;
    std::vector<char> member(static_cast<std::size_t>(g.num_vertices()), 0);
    for (Vertex v : vertices)
        member[v] = 1;
    std::vector<Vertex> stack{vertices.front()};
    member[vertices.front()] = 2;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex u : g.neighbors(v))
            if (member[u] == 1) {
                member[u] = 2;
                ++reached;
                stack.push_back(u);
            }
    }
    return reached == vertices.size();
}

}  // namespace ndsolve
