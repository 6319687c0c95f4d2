#pragma once

#include "ndsolve/generators.hpp"
#include "ndsolve/graph.hpp"
#include "ndsolve/ilp.hpp"
#include "ndsolve/nd.hpp"

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <random>
#include <vector>

namespace ndsolve::testing {

/// Graph from 0-based edges.
inline Graph make_graph(Vertex n, std::initializer_list<Edge> edges)
{
    std::vector<Edge> list(edges);
    return Graph::from_edges(n, list);
}

inline Graph complete(Vertex n)
{
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

inline Graph path(Vertex n)
{
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v)
        edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, edges);
}

/// K_{a,b}: vertices 0..a-1 on one side.
inline Graph complete_bipartite(Vertex a, Vertex b)
{
    std::vector<Edge> edges;
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = 0; v < b; ++v)
            edges.emplace_back(u, a + v);
    return Graph::from_edges(a + b, edges);
}

inline Graph random_graph(Vertex n, double p, std::mt19937_64& rng)
{
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p)
                edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

/// Graph whose bit i of `code` selects the i-th pair (u < v) in lexicographic order.
inline Graph graph_from_code(Vertex n, std::uint64_t code)
{
    std::vector<Edge> edges;
    int bit = 0;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v, ++bit)
            if (code >> bit & 1)
                edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

/// Def.-2 check written directly from the neighborhood sets.
inline bool same_type_by_definition(const Graph& g, Vertex u, Vertex v)
{
    std::vector<Vertex> a, b;
    for (Vertex w : g.neighbors(u))
        if (w != v)
            a.push_back(w);
    for (Vertex w : g.neighbors(v))
        if (w != u)
            b.push_back(w);
    return a == b;
}

/// Minimum number of classes over all set partitions whose classes are
/// pairwise same-type (restricted growth strings).
inline int brute_force_nd(const Graph& g)
{
    const Vertex n = g.num_vertices();
    if (n == 0)
        return 0;
    std::vector<std::vector<char>> same(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n)));
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            same[u][v] = same_type_by_definition(g, u, v);
    std::vector<int> block(static_cast<std::size_t>(n), 0);
    int best = n;
    std::function<void(Vertex, int)> rec = [&](Vertex v, int used) {
        if (used >= best)
            return;
        if (v == n) {
            best = used;
            return;
        }
        for (int b = 0; b <= used && b < best; ++b) {
            bool ok = true;
            for (Vertex u = 0; u < v && ok; ++u)
                if (block[u] == b && !same[u][v])
                    ok = false;
            if (!ok)
                continue;
            block[v] = b;
            rec(v + 1, std::max(used, b + 1));
        }
    };
    rec(0, 0);
    return best;
}

/// Tiny random templates for oracle sweeps: n <= max_n, 1 <= k <= max_k.
inline TypeTemplate small_template(std::mt19937_64& rng, int max_k, int max_n)
{
    const int k = static_cast<int>(uniform_int(rng, 1, max_k));
    return random_template(k, max_n, rng, 0.5, 0.5);
}

/// Enumerates every assignment within the bounds; returns whether any
/// satisfies the system. Independent of the propagation code.
inline bool enumerate_feasible(const IlpProblem& problem, std::vector<std::int64_t>* witness = nullptr)
{
    const int n = problem.num_vars();
    std::vector<std::int64_t> x(problem.lower.begin(), problem.lower.end());
    for (;;) {
        bool ok = true;
        for (const auto& c : problem.constraints) {
            std::int64_t activity = 0;
            for (int j = 0; j < n; ++j)
                activity += c.coefficients[j] * x[j];
            if (c.relation == Relation::equal ? activity != c.rhs : activity > c.rhs) {
                ok = false;
                break;
            }
        }
        if (ok) {
            if (witness)
                *witness = x;
            return true;
        }
        int j = 0;
        while (j < n && x[j] == problem.upper[j]) {
            x[j] = problem.lower[j];
            ++j;
        }
        if (j == n)
            return false;
        ++x[j];
    }
}

}  // namespace ndsolve::testing
