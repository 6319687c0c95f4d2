#pragma once

#include "ndsolve/graph.hpp"
#include "ndsolve/ilp.hpp"
#include "ndsolve/nd.hpp"
#include "ndsolve/witness.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace ndsolve {

/// A precoloring instance after the independent-type reduction: every
/// independent type is either fully precolored (frozen) or has exactly one
/// remaining vertex, which is uncolored.
struct ReducedInstance {
    const PrecolorInstance* base = nullptr;
    std::vector<std::optional<Color>> precolor;              // per original vertex, after extension
    std::vector<std::vector<Vertex>> classes;                // kept members per type
    std::map<Vertex, std::vector<Vertex>> collapsed;         // representative -> all collapsed members
    std::vector<bool> frozen;                                // per type
    std::vector<TypeId> active_types;                        // every type that is not frozen
    std::vector<TypeId> frozen_types;

    [[nodiscard]] int size(TypeId t) const noexcept { return static_cast<int>(classes[t].size()); }
    /// Kept original vertices in ascending order.
    [[nodiscard]] std::vector<Vertex> kept_vertices() const;
    /// The reduced instance as a standalone instance on the kept vertices
    /// (vertex i of the result is kept_vertices()[i]).
    [[nodiscard]] PrecolorInstance materialize() const;
};

/// Colors sharing the exact set of types they are precolored in.
struct ColorCategory {
    std::uint64_t type_set = 0;
    std::vector<Color> colors;    // explicit members; empty for the unprecolored category
    std::int64_t color_count = 0;
};

/// Colors of one category that end up occupying exactly `type_set`.
struct ColorSubcategory {
    int category = 0;
    std::uint64_t type_set = 0;
    int variable = -1;
};

struct PrecolorIlp {
    IlpProblem problem;
    std::vector<ColorSubcategory> subcategories;   // subcategories[i].variable == i
};

/// Extends a precolor present in an independent type to its uncolored
/// members, or collapses a wholly uncolored independent type to its
/// smallest vertex. Clique types are left alone. `base` must outlive the result.
ReducedInstance reduce_independent_types(const PrecolorInstance& base, const TypePartition& partition);

/// Categories sorted by type-set mask; the unprecolored category (mask 0) is
/// always present. Throws InvalidInstance if a color repeats inside a clique type.
std::vector<ColorCategory> compute_color_categories(const ReducedInstance& reduced, const TypePartition& partition);

PrecolorIlp build_precolor_ilp(const ReducedInstance& reduced, const std::vector<ColorCategory>& categories,
                               const TypeGraph& h);

/// A full coloring of the original instance from feasible subcategory counts.
ColoringWitness reconstruct_coloring(const ReducedInstance& reduced, const std::vector<ColorCategory>& categories,
                                     const PrecolorIlp& ilp, const IlpSolution& counts);

PrecolorReport solve_precolor(const PrecolorInstance& instance);

}  // namespace ndsolve
