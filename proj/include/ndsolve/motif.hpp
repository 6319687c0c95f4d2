#pragma once

#include "ndsolve/graph.hpp"
#include "ndsolve/nd.hpp"
#include "ndsolve/witness.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ndsolve {

/// Type-subset masks need one bit per type.
inline constexpr TypeId max_mask_types = 62;

struct CandidateTypeSet {
    std::uint64_t types = 0;   // bit t set <=> type t in the candidate
    bool connected = false;
};

/// One vertex per type of a candidate set, colors drawn from the motif.
struct Skeleton {
    std::vector<std::pair<TypeId, Vertex>> chosen;   // ascending type id
};

/// Whether the types in `mask` induce a connected subgraph of H.
bool types_connected(const TypeGraph& h, std::uint64_t mask);

/// Decides Graph Motif by enumerating connected type subsets of H and
/// matching motif colors to types.
MotifReport solve_motif(const MotifInstance& instance);

/// Bipartite matching between motif color occurrences and candidate types;
/// a skeleton exists iff every type is matched.
std::optional<Skeleton> skeleton_exists(const MotifInstance& instance, const TypePartition& partition,
                                        const CandidateTypeSet& candidate);

/// Completes a skeleton to a full witness by adding unused vertices of the
/// candidate types whose colors are still missing. Requires the motif to be
/// contained in the candidate's color multiset.
MotifWitness extend_skeleton(const MotifInstance& instance, const TypePartition& partition,
                             const CandidateTypeSet& candidate, const Skeleton& skeleton);

}  // namespace ndsolve
