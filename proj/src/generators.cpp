#include "ndsolve/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ndsolve {

int TypeTemplate::num_vertices() const noexcept
{
    return std::accumulate(sizes.begin(), sizes.end(), 0);
}

std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi)
{
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(rng() % span);
}

namespace {

bool chance(std::mt19937_64& rng, double p)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

template <typename T>
void shuffle(std::vector<T>& items, std::mt19937_64& rng)
{
    for (std::size_t i = items.size(); i > 1; --i)
        std::swap(items[i - 1], items[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(i) - 1))]);
}

}  // namespace

Graph generate_from_template(const TypeTemplate& blueprint, std::uint64_t seed)
{
    const int k = blueprint.k();
    if (static_cast<int>(blueprint.clique_flags.size()) != k)
        throw std::invalid_argument("template: one clique flag per type required");
    for (int size : blueprint.sizes)
        if (size < 1)
            throw std::invalid_argument("template: type sizes must be >= 1");
    std::set<std::pair<int, int>> h_edges;
    for (auto [a, b] : blueprint.h_edges) {
        if (a < 0 || b < 0 || a >= k || b >= k)
            throw std::invalid_argument("template: type-graph edge out of range");
        if (a == b)
            throw std::invalid_argument("template: self-loop in type graph");
        h_edges.emplace(std::min(a, b), std::max(a, b));
    }

    std::mt19937_64 rng(seed);
    const int n = blueprint.num_vertices();
    std::vector<Vertex> label(static_cast<std::size_t>(n));
    std::iota(label.begin(), label.end(), 0);
    shuffle(label, rng);

    std::vector<std::vector<Vertex>> members(static_cast<std::size_t>(k));
    int next = 0;
    for (int t = 0; t < k; ++t)
        for (int i = 0; i < blueprint.sizes[t]; ++i)
            members[t].push_back(label[next++]);

    std::vector<std::vector<Vertex>> adjacency(static_cast<std::size_t>(n));
    for (int t = 0; t < k; ++t) {
        if (!blueprint.clique_flags[t])
            continue;
        for (Vertex u : members[t])
            for (Vertex v : members[t])
                if (u != v)
                    adjacency[u].push_back(v);
    }
    for (auto [a, b] : h_edges)
        for (Vertex u : members[a])
            for (Vertex v : members[b]) {
                adjacency[u].push_back(v);
                adjacency[v].push_back(u);
            }
    return Graph::from_adjacency(std::move(adjacency));
}

TypeTemplate random_template(int k, int max_vertices, std::mt19937_64& rng, double edge_probability,
                             double clique_probability)
{
    if (k < 1 || max_vertices < k)
        throw std::invalid_argument("random_template: need 1 <= k <= max_vertices");
    const int total = static_cast<int>(uniform_int(rng, k, max_vertices));
    return random_template_with_total(k, total, rng, edge_probability, clique_probability);
}

TypeTemplate random_template_with_total(int k, int total, std::mt19937_64& rng, double edge_probability,
                                        double clique_probability)
{
    if (k < 1 || total < k)
        throw std::invalid_argument("random_template: need 1 <= k <= total");
    TypeTemplate blueprint;
    blueprint.sizes.assign(static_cast<std::size_t>(k), 1);
    for (int extra = total - k; extra > 0; --extra)
        ++blueprint.sizes[static_cast<std::size_t>(uniform_int(rng, 0, k - 1))];
    for (int t = 0; t < k; ++t)
        blueprint.clique_flags.push_back(chance(rng, clique_probability));
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (chance(rng, edge_probability))
                blueprint.h_edges.emplace_back(a, b);
    return blueprint;
}

MotifInstance random_motif_instance(const TypeTemplate& blueprint, const AnnotationParams& params,
                                    std::uint64_t seed)
{
    if (params.colors < 1 || params.colors > 16)
        throw InvalidInstance("motif palette must have 1..16 colors");
    if (params.motif_size < 1)
        throw InvalidInstance("motif size must be positive");
    MotifInstance instance;
    instance.graph = generate_from_template(blueprint, seed);
    std::mt19937_64 rng(seed ^ 0x6d6f746966ULL);
    const Vertex n = instance.graph.num_vertices();
    for (Vertex v = 0; v < n; ++v)
        instance.vertex_color.push_back(static_cast<Color>(uniform_int(rng, 1, params.colors)));

    if (n > 0 && chance(rng, params.planted_probability)) {
        // Grow a random connected vertex set and read the motif off it.
        std::vector<Vertex> chosen{static_cast<Vertex>(uniform_int(rng, 0, n - 1))};
        std::vector<char> in(static_cast<std::size_t>(n), 0);
        in[chosen[0]] = 1;
        while (static_cast<int>(chosen.size()) < params.motif_size) {
            std::vector<Vertex> frontier;
            for (Vertex v : chosen)
                for (Vertex u : instance.graph.neighbors(v))
                    if (!in[u])
                        frontier.push_back(u);
            std::sort(frontier.begin(), frontier.end());
            frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
            if (frontier.empty())
                break;
            Vertex pick = frontier[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(frontier.size()) - 1))];
            in[pick] = 1;
            chosen.push_back(pick);
        }
        for (Vertex v : chosen)
            ++instance.motif[instance.vertex_color[v]];
    } else {
        for (int i = 0; i < params.motif_size; ++i)
            ++instance.motif[static_cast<Color>(uniform_int(rng, 1, params.colors))];
    }
    return instance;
}

PathsInstance random_paths_instance(const TypeTemplate& blueprint, const AnnotationParams& params,
                                    std::uint64_t seed)
{
    PathsInstance instance;
    instance.graph = generate_from_template(blueprint, seed);
    const Vertex n = instance.graph.num_vertices();
    if (params.pairs < 0 || 2 * params.pairs > n)
        throw InvalidInstance("more terminal pairs requested than the graph can hold");
    std::mt19937_64 rng(seed ^ 0x7061746873ULL);
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    shuffle(order, rng);
    for (int i = 0; i < params.pairs; ++i)
        instance.pairs.emplace_back(order[2 * i], order[2 * i + 1]);
    return instance;
}

PrecolorInstance random_precolor_instance(const TypeTemplate& blueprint, const AnnotationParams& params,
                                          std::uint64_t seed)
{
    if (params.num_colors < 1 || params.num_colors > 16)
        throw InvalidInstance("color budget must be in 1..16");
    PrecolorInstance instance;
    instance.graph = generate_from_template(blueprint, seed);
    instance.num_colors = params.num_colors;
    const Vertex n = instance.graph.num_vertices();
    instance.precolor.assign(static_cast<std::size_t>(n), std::nullopt);
    std::mt19937_64 rng(seed ^ 0x7072656364ULL);
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    shuffle(order, rng);
    for (Vertex v : order) {
        if (!chance(rng, params.precolor_probability))
            continue;
        std::vector<Color> free;
        for (Color c = 1; c <= params.num_colors; ++c) {
            bool clash = false;
            for (Vertex u : instance.graph.neighbors(v))
                clash = clash || instance.precolor[u] == c;
            if (!clash)
                free.push_back(c);
        }
        if (!free.empty())
            instance.precolor[v] = free[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(free.size()) - 1))];
    }
    return instance;
}

Instance random_instance(Problem problem, const TypeTemplate& blueprint, const AnnotationParams& params,
                         std::uint64_t seed)
{
    switch (problem) {
    case Problem::motif: return random_motif_instance(blueprint, params, seed);
    case Problem::paths: return random_paths_instance(blueprint, params, seed);
    case Problem::precolor: return random_precolor_instance(blueprint, params, seed);
    }
    throw std::invalid_argument("unknown problem");
}

}  // namespace ndsolve
