#pragma once

#include "ndsolve/graph.hpp"
#include "ndsolve/witness.hpp"

#include <optional>
#include <stdexcept>

namespace ndsolve {

/// Exhaustive deciders that look only at the raw graph. They never consult
/// the type decomposition or the ILP engine.

class OracleSizeGuard : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr Vertex oracle_motif_max_vertices = 15;
inline constexpr Vertex oracle_paths_max_vertices = 15;
inline constexpr std::size_t oracle_paths_max_pairs = 4;
inline constexpr Vertex oracle_precolor_max_vertices = 12;

template <typename Witness>
struct OracleResult {
    bool answer = false;
    std::optional<Witness> witness;
};

/// All vertex subsets of size |M|, checked for connectivity and exact colors.
OracleResult<MotifWitness> oracle_motif(const MotifInstance& instance);

/// Routes pairs in order, growing each path by depth-first search over
/// unused non-terminal vertices.
OracleResult<PathsWitness> oracle_paths(const PathsInstance& instance);

/// Backtracking over uncolored vertices in id order, colors ascending, on the
/// palette of precolored colors plus as many fresh colors as there are
/// uncolored vertices.
OracleResult<ColoringWitness> oracle_precolor(const PrecolorInstance& instance);

}  // namespace ndsolve
