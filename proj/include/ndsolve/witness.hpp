#pragma once

#include "ndsolve/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ndsolve {

struct MotifWitness {
    std::vector<Vertex> vertices;   // sorted
    friend bool operator==(const MotifWitness&, const MotifWitness&) = default;
};

struct PathsWitness {
    std::vector<std::vector<Vertex>> paths;   // paths[i] runs s_i -> t_i
    friend bool operator==(const PathsWitness&, const PathsWitness&) = default;
};

struct ColoringWitness {
    std::vector<Color> color_of;   // total, colors in 1..r
    friend bool operator==(const ColoringWitness&, const ColoringWitness&) = default;
};

struct SolveStats {
    int nd = 0;
    std::optional<int> ilp_vars;
    double elapsed_ms = 0.0;
};

template <typename Witness>
struct SolveReport {
    bool answer = false;
    std::optional<Witness> witness;
    SolveStats stats;
};

using MotifReport = SolveReport<MotifWitness>;
using PathsReport = SolveReport<PathsWitness>;
using PrecolorReport = SolveReport<ColoringWitness>;

// Witness validators return an empty string on success, otherwise the first
// violated condition.
std::string check_witness(const MotifInstance& instance, const MotifWitness& witness);

/// With `require_simple` set, also demands at most one internal vertex per
/// neighborhood type (types computed from the instance graph).
std::string check_witness(const PathsInstance& instance, const PathsWitness& witness,
                          bool require_simple = false);

std::string check_witness(const PrecolorInstance& instance, const ColoringWitness& witness);

}  // namespace ndsolve
