#pragma once

#include "ndsolve/graph.hpp"
#include "ndsolve/ilp.hpp"
#include "ndsolve/nd.hpp"
#include "ndsolve/witness.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ndsolve {

/// Paths whose endpoints have types {start_type, end_type} and whose
/// internal vertices occupy exactly the types in `route`, one vertex each.
struct PathCategory {
    TypeId start_type = 0;   // start_type <= end_type
    TypeId end_type = 0;
    std::uint64_t route = 0;
    std::vector<TypeId> order;   // route types as traversed from start_type
    int variable = -1;
};

struct PathsIlp {
    IlpProblem problem;
    std::vector<PathCategory> categories;   // categories[i].variable == i
};

/// An ordering of the route's types such that start_type links to the
/// first, consecutive types link, and the last links to end_type; nullopt if
/// none exists. Two distinct types link when adjacent in H; a type links to
/// itself only when it is a clique.
std::optional<std::vector<TypeId>> route_order(const TypeGraph& h, std::uint64_t route, TypeId start_type,
                                               TypeId end_type);

bool route_is_valid(const TypeGraph& h, std::uint64_t route, TypeId start_type, TypeId end_type);

/// Shortcuts a path until it holds at most one internal vertex per type:
/// with x, y the first and last internal vertices of a repeated type and z
/// the successor of y, the segment x..z collapses to the edge x-z.
std::vector<Vertex> simplify_path(const Graph& g, const TypePartition& partition, std::vector<Vertex> path);

PathsIlp build_paths_ilp(const PathsInstance& instance, const TypePartition& partition, const TypeGraph& h);

/// Turns feasible category counts into concrete vertex-disjoint paths.
PathsWitness reconstruct_paths(const PathsInstance& instance, const TypePartition& partition,
                               const PathsIlp& ilp, const IlpSolution& counts);

PathsReport solve_paths(const PathsInstance& instance);

}  // namespace ndsolve
