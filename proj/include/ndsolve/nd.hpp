#pragma once

#include "ndsolve/graph.hpp"

#include <optional>
#include <vector>

namespace ndsolve {

using TypeId = std::int32_t;

/// Partition of V into neighborhood types. Two vertices u, v share a type iff
/// N(u) \ {v} == N(v) \ {u}; every class is then a clique or an independent set.
struct TypePartition {
    std::vector<TypeId> type_of;
    std::vector<std::vector<Vertex>> classes;   // members sorted ascending
    std::vector<bool> clique_flag;              // false for singletons

    [[nodiscard]] TypeId k() const noexcept { return static_cast<TypeId>(classes.size()); }
    [[nodiscard]] int size(TypeId t) const noexcept { return static_cast<int>(classes[t].size()); }

    friend bool operator==(const TypePartition&, const TypePartition&) = default;
};

/// Quotient graph H: one node per type, an edge when the two classes are
/// joined completely.
class TypeGraph {
public:
    TypeGraph() = default;
    TypeGraph(std::vector<int> sizes, std::vector<bool> clique_flag,
              const std::vector<std::pair<TypeId, TypeId>>& edges);

    [[nodiscard]] TypeId k() const noexcept { return static_cast<TypeId>(size_.size()); }
    [[nodiscard]] int size(TypeId t) const noexcept { return size_[t]; }
    [[nodiscard]] bool clique(TypeId t) const noexcept { return clique_flag_[t]; }
    [[nodiscard]] bool adjacent(TypeId a, TypeId b) const noexcept;
    [[nodiscard]] const std::vector<TypeId>& neighbors(TypeId t) const noexcept { return neighbors_[t]; }
    /// Type-graph edges with a < b, sorted.
    [[nodiscard]] std::vector<std::pair<TypeId, TypeId>> edges() const;

    /// Bitmask of H-neighbors; only meaningful for k <= 64.
    [[nodiscard]] std::uint64_t neighbor_mask(TypeId t) const noexcept { return neighbor_mask_[t]; }

private:
    std::vector<int> size_;
    std::vector<bool> clique_flag_;
    std::vector<bool> adjacency_;
    std::vector<std::vector<TypeId>> neighbors_;
    std::vector<std::uint64_t> neighbor_mask_;
};

/// Def.-2 predicate: N(u) \ {v} == N(v) \ {u}.
bool same_type(const Graph& g, Vertex u, Vertex v);

/// Coarsest type partition in O(n + m) expected time. Type ids follow the
/// order of each class's smallest vertex.
TypePartition compute_type_partition(const Graph& g);

/// Throws std::logic_error if some pair of classes is joined only partially
/// or a class is neither a clique nor independent.
TypeGraph build_type_graph(const Graph& g, const TypePartition& partition);

/// True iff every class consists of same-type vertices, flags match the
/// class structure, and no two classes could be merged.
bool verify_partition(const Graph& g, const TypePartition& partition);

/// A vertex cover of size <= budget, or nullopt. Simple bounded search tree.
std::optional<std::vector<Vertex>> compute_vertex_cover(const Graph& g, int budget);

/// Smallest cover size, found by raising the budget from 0 up to `max_budget`.
std::optional<std::vector<Vertex>> minimum_vertex_cover(const Graph& g, int max_budget);

}  // namespace ndsolve
