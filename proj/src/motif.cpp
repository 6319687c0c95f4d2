#include "ndsolve/motif.hpp"

#include "ndsolve/matching.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <chrono>
#include <stdexcept>

namespace ndsolve {

namespace {

std::vector<TypeId> types_in(std::uint64_t mask)
{
    std::vector<TypeId> result;
    for (; mask != 0; mask &= mask - 1)
        result.push_back(static_cast<TypeId>(std::countr_zero(mask)));
    return result;
}

/// Motif colors as dense indices: slot i holds motif color i's required count.
struct MotifColors {
    explicit MotifColors(const MotifInstance& instance)
    {
        for (const auto& [color, count] : instance.motif) {
            colors.push_back(color);
            need.push_back(count);
        }
    }
    int index(Color c) const
    {
        auto it = std::lower_bound(colors.begin(), colors.end(), c);
        return it != colors.end() && *it == c ? static_cast<int>(it - colors.begin()) : -1;
    }
    std::vector<Color> colors;
    std::vector<int> need;
};

}  // namespace

bool types_connected(const TypeGraph& h, std::uint64_t mask)
{
    if (mask == 0)
        return false;
    std::uint64_t reached = mask & (~mask + 1);
    std::uint64_t frontier = reached;
    while (frontier != 0) {
        const auto t = static_cast<TypeId>(std::countr_zero(frontier));
        frontier &= frontier - 1;
        const std::uint64_t fresh = h.neighbor_mask(t) & mask & ~reached;
        reached |= fresh;
        frontier |= fresh;
    }
    return reached == mask;
}

std::optional<Skeleton> skeleton_exists(const MotifInstance& instance, const TypePartition& partition,
                                        const CandidateTypeSet& candidate)
{
    const MotifColors motif(instance);
    const auto types = types_in(candidate.types);

    // Right side: one node per occurrence of each motif color.
    std::vector<int> occurrence_color;
    std::vector<int> first_occurrence;
    for (std::size_t c = 0; c < motif.colors.size(); ++c) {
        first_occurrence.push_back(static_cast<int>(occurrence_color.size()));
        occurrence_color.insert(occurrence_color.end(), static_cast<std::size_t>(motif.need[c]), static_cast<int>(c));
    }

    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < types.size(); ++i) {
        std::vector<bool> present(motif.colors.size(), false);
        for (Vertex v : partition.classes[types[i]])
            if (int c = motif.index(instance.vertex_color[v]); c >= 0)
                present[c] = true;
        for (std::size_t c = 0; c < present.size(); ++c)
            if (present[c])
                for (int o = 0; o < motif.need[c]; ++o)
                    edges.emplace_back(static_cast<int>(i), first_occurrence[c] + o);
    }

    const auto matching = max_bipartite_matching(static_cast<int>(types.size()),
                                                 static_cast<int>(occurrence_color.size()), edges);
    if (matching.size != static_cast<int>(types.size()))
        return std::nullopt;

    Skeleton skeleton;
    for (std::size_t i = 0; i < types.size(); ++i) {
        const Color wanted = motif.colors[occurrence_color[matching.mate_of_left[i]]];
        const auto& members = partition.classes[types[i]];
        auto it = std::find_if(members.begin(), members.end(),
                               [&](Vertex v) { return instance.vertex_color[v] == wanted; });
        assert(it != members.end());
        skeleton.chosen.emplace_back(types[i], *it);
    }
    return skeleton;
}

MotifWitness extend_skeleton(const MotifInstance& instance, const TypePartition& partition,
                             const CandidateTypeSet& candidate, const Skeleton& skeleton)
{
    const MotifColors motif(instance);
    auto missing = motif.need;
    MotifWitness witness;
    std::vector<char> taken(static_cast<std::size_t>(instance.graph.num_vertices()), 0);
    for (auto [type, v] : skeleton.chosen) {
        const int c = motif.index(instance.vertex_color[v]);
        if (c < 0 || missing[c] == 0)
            throw std::logic_error("skeleton colors exceed the motif");
        --missing[c];
        taken[v] = 1;
        witness.vertices.push_back(v);
    }
    for (TypeId t : types_in(candidate.types))
        for (Vertex v : partition.classes[t]) {
            if (taken[v])
                continue;
            const int c = motif.index(instance.vertex_color[v]);
            if (c >= 0 && missing[c] > 0) {
                --missing[c];
                taken[v] = 1;
                witness.vertices.push_back(v);
            }
        }
    if (std::any_of(missing.begin(), missing.end(), [](int m) { return m > 0; }))
        throw std::logic_error("candidate types do not carry every motif color");
    std::sort(witness.vertices.begin(), witness.vertices.end());
    return witness;
}

MotifReport solve_motif(const MotifInstance& instance)
{
    const auto start = std::chrono::steady_clock::now();
    validate(instance);
    const auto partition = compute_type_partition(instance.graph);
    const auto h = build_type_graph(instance.graph, partition);
    const TypeId k = partition.k();

    MotifReport report;
    report.stats.nd = k;
    auto finish = [&]() -> MotifReport {
        report.stats.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return report;
    };

    const MotifColors motif(instance);
    const int motif_size = instance.motif_size();
    if (motif_size == 1) {
        const Color wanted = motif.colors.front();
        const auto& colors = instance.vertex_color;
        if (auto it = std::find(colors.begin(), colors.end(), wanted); it != colors.end()) {
            report.answer = true;
            report.witness = MotifWitness{{static_cast<Vertex>(it - colors.begin())}};
        }
        return finish();
    }
    if (k > max_mask_types)
        throw std::length_error("neighborhood diversity too large for subset enumeration");

    // Per-type counts of each motif color.
    std::vector<std::vector<int>> type_color_count(static_cast<std::size_t>(k),
                                                   std::vector<int>(motif.colors.size(), 0));
    for (Vertex v = 0; v < instance.graph.num_vertices(); ++v)
        if (int c = motif.index(instance.vertex_color[v]); c >= 0)
            ++type_color_count[partition.type_of[v]][c];

    std::vector<int> available(motif.colors.size());
    const std::uint64_t end = std::uint64_t{1} << k;
    for (std::uint64_t mask = 1; mask < end; ++mask) {
        if (std::popcount(mask) > motif_size)
            continue;
        if (std::has_single_bit(mask) && !partition.clique_flag[std::countr_zero(mask)])
            continue;   // a lone independent type cannot host a connected set of >= 2 vertices
        if (!types_connected(h, mask))
            continue;
        std::fill(available.begin(), available.end(), 0);
        for (TypeId t : types_in(mask))
            for (std::size_t c = 0; c < available.size(); ++c)
                available[c] += type_color_count[t][c];
        bool contains = true;
        for (std::size_t c = 0; c < available.size() && contains; ++c)
            contains = available[c] >= motif.need[c];
        if (!contains)
            continue;
        const CandidateTypeSet candidate{mask, true};
        if (auto skeleton = skeleton_exists(instance, partition, candidate)) {
            report.answer = true;
            report.witness = extend_skeleton(instance, partition, candidate, *skeleton);
            return finish();
        }
    }
    return finish();
}

}  // namespace ndsolve
