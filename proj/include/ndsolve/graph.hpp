#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ndsolve {

using Vertex = std::int32_t;
using Color = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Thrown when a graph or instance violates one of its structural invariants.
class InvalidInstance : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Undirected simple graph on vertices 0..n-1, stored as sorted adjacency
/// arrays in compressed form. Immutable after construction.
class Graph {
public:
    Graph() = default;
    explicit Graph(Vertex n);

    /// Validating constructor: rejects self-loops, duplicates and out-of-range ids.
    static Graph from_edges(Vertex n, std::span<const Edge> edges);

    /// Trusted construction from symmetric adjacency lists (sorted here).
    /// Used by generators; still checks symmetry in debug builds.
    static Graph from_adjacency(std::vector<std::vector<Vertex>> adjacency);

    [[nodiscard]] Vertex num_vertices() const noexcept { return n_; }
    [[nodiscard]] std::size_t num_edges() const noexcept { return neighbors_.size() / 2; }

    [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const noexcept
    {
        return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
    }
    [[nodiscard]] std::size_t degree(Vertex v) const noexcept
    {
        return offsets_[v + 1] - offsets_[v];
    }
    [[nodiscard]] bool adjacent(Vertex u, Vertex v) const noexcept;

    /// Edges with u < v, ordered lexicographically.
    [[nodiscard]] std::vector<Edge> edges() const;

    /// Subgraph induced on `keep` (in the given order); vertex i of the result is keep[i].
    [[nodiscard]] Graph induced(std::span<const Vertex> keep) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    Vertex n_ = 0;
    std::vector<std::size_t> offsets_{0};
    std::vector<Vertex> neighbors_;
};

struct MotifInstance {
    Graph graph;
    std::vector<Color> vertex_color;   // one color per vertex
    std::map<Color, int> motif;        // color -> multiplicity, all > 0

    [[nodiscard]] int motif_size() const;
    friend bool operator==(const MotifInstance&, const MotifInstance&) = default;
};

struct PathsInstance {
    Graph graph;
    std::vector<Edge> pairs;   // (s_i, t_i), all terminals distinct

    friend bool operator==(const PathsInstance&, const PathsInstance&) = default;
};

struct PrecolorInstance {
    Graph graph;
    std::vector<std::optional<Color>> precolor;   // per vertex, colors in 1..r
    Color num_colors = 1;

    friend bool operator==(const PrecolorInstance&, const PrecolorInstance&) = default;
};

// Instance validators; each throws InvalidInstance with a message naming the violation.
void validate(const MotifInstance& instance);
void validate(const PathsInstance& instance);
void validate(const PrecolorInstance& instance);

/// Connectivity of the subgraph induced on `vertices` (empty set counts as disconnected).
bool induces_connected(const Graph& g, std::span<const Vertex> vertices);

}  // namespace ndsolve
