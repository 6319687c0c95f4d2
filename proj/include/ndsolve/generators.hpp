#pragma once

#include "ndsolve/graph.hpp"
#include "ndsolve/instance_io.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace ndsolve {

/// Blueprint of a graph with prescribed type structure: each type is a
/// clique or an independent set of the given size, and types joined in
/// `h_edges` are joined completely.
struct TypeTemplate {
    std::vector<int> sizes;
    std::vector<bool> clique_flags;
    std::vector<std::pair<int, int>> h_edges;

    [[nodiscard]] int k() const noexcept { return static_cast<int>(sizes.size()); }
    [[nodiscard]] int num_vertices() const noexcept;
};

/// Uniform integer in [lo, hi]; portable across standard libraries.
std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

/// Expands the template and relabels vertices by a seeded permutation.
/// Throws std::invalid_argument on malformed templates.
Graph generate_from_template(const TypeTemplate& blueprint, std::uint64_t seed);

/// Random template with `k` types whose sizes sum to exactly `total` (>= k).
TypeTemplate random_template_with_total(int k, int total, std::mt19937_64& rng, double edge_probability = 0.5,
                                        double clique_probability = 0.5);

/// Random template with `k` types whose sizes sum to at most `max_vertices`
/// (each size >= 1; requires max_vertices >= k).
TypeTemplate random_template(int k, int max_vertices, std::mt19937_64& rng, double edge_probability = 0.5,
                             double clique_probability = 0.5);

enum class Problem { motif, paths, precolor };

struct AnnotationParams {
    int colors = 3;                 // motif palette, <= 16
    int motif_size = 3;
    double planted_probability = 0.5;   // chance the motif is read off a connected vertex set
    int pairs = 2;                  // <= n / 2
    Color num_colors = 3;           // precolor budget r, <= 16
    double precolor_probability = 0.3;
};

MotifInstance random_motif_instance(const TypeTemplate& blueprint, const AnnotationParams& params,
                                    std::uint64_t seed);
PathsInstance random_paths_instance(const TypeTemplate& blueprint, const AnnotationParams& params,
                                    std::uint64_t seed);
PrecolorInstance random_precolor_instance(const TypeTemplate& blueprint, const AnnotationParams& params,
                                          std::uint64_t seed);

Instance random_instance(Problem problem, const TypeTemplate& blueprint, const AnnotationParams& params,
                         std::uint64_t seed);

}  // namespace ndsolve
