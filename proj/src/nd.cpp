#include "ndsolve/nd.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace ndsolve {

namespace {

std::uint64_t mix(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

struct BucketKey {
    std::uint64_t hash;
    std::size_t degree;
    bool operator==(const BucketKey&) const = default;
};

struct BucketKeyHash {
    std::size_t operator()(const BucketKey& key) const noexcept
    {
        return static_cast<std::size_t>(key.hash ^ mix(key.degree));
    }
};

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    Vertex find(Vertex v)
    {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }
    void unite(Vertex a, Vertex b)
    {
        a = find(a);
        b = find(b);
        if (a != b)
            parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<Vertex> parent_;
};

bool open_equal(const Graph& g, Vertex u, Vertex v)
{
    auto a = g.neighbors(u);
    auto b = g.neighbors(v);
    return std::equal(a.begin(), a.end(), b.begin(), b.end());
}

bool closed_equal(const Graph& g, Vertex u, Vertex v)
{
    return g.degree(u) == g.degree(v) && g.adjacent(u, v) && same_type(g, u, v);
}

std::vector<Vertex> closed_neighborhood(const Graph& g, Vertex v)
{
    auto nbrs = g.neighbors(v);
    std::vector<Vertex> result(nbrs.begin(), nbrs.end());
    result.insert(std::upper_bound(result.begin(), result.end(), v), v);
    return result;
}

}  // namespace

TypeGraph::TypeGraph(std::vector<int> sizes, std::vector<bool> clique_flag,
                     const std::vector<std::pair<TypeId, TypeId>>& edges)
    : size_(std::move(sizes)), clique_flag_(std::move(clique_flag)), neighbors_(size_.size()),
      neighbor_mask_(size_.size(), 0)
{
    const auto k = size_.size();
    if (clique_flag_.size() != k)
        throw std::invalid_argument("type graph: flag count differs from type count");
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= k || static_cast<std::size_t>(b) >= k || a == b)
            throw std::invalid_argument("type graph: bad edge");
        neighbors_[a].push_back(b);
        neighbors_[b].push_back(a);
    }
    for (std::size_t t = 0; t < k; ++t) {
        auto& list = neighbors_[t];
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        if (k <= 64)
            for (TypeId u : list)
                neighbor_mask_[t] |= std::uint64_t{1} << u;
    }
    // A dense matrix only while it stays small; larger H falls back to lists.
    if (k <= 4096) {
        adjacency_.assign(k * k, false);
        for (std::size_t t = 0; t < k; ++t)
            for (TypeId u : neighbors_[t])
                adjacency_[t * k + u] = true;
    }
}

bool TypeGraph::adjacent(TypeId a, TypeId b) const noexcept
{
    if (a == b)
        return false;
    if (!adjacency_.empty())
        return adjacency_[static_cast<std::size_t>(a) * size_.size() + b];
    return std::binary_search(neighbors_[a].begin(), neighbors_[a].end(), b);
}

std::vector<std::pair<TypeId, TypeId>> TypeGraph::edges() const
{
    std::vector<std::pair<TypeId, TypeId>> result;
    for (TypeId a = 0; a < k(); ++a)
        for (TypeId b : neighbors_[a])
            if (a < b)
                result.emplace_back(a, b);
    return result;
}

bool same_type(const Graph& g, Vertex u, Vertex v)
{
    if (u == v)
        return true;
    auto a = g.neighbors(u);
    auto b = g.neighbors(v);
    auto i = a.begin();
    auto j = b.begin();
    for (;;) {
        while (i != a.end() && *i == v)
            ++i;
        while (j != b.end() && *j == u)
            ++j;
        if (i == a.end() || j == b.end())
            return i == a.end() && j == b.end();
        if (*i != *j)
            return false;
        ++i;
        ++j;
    }
}

TypePartition compute_type_partition(const Graph& g)
{
    const Vertex n = g.num_vertices();
    std::vector<std::uint64_t> open_hash(static_cast<std::size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex u : g.neighbors(v))
            open_hash[v] += mix(static_cast<std::uint64_t>(u));

    UnionFind classes(static_cast<std::size_t>(n));
    std::unordered_map<BucketKey, std::vector<Vertex>, BucketKeyHash> open_reps, closed_reps;
    open_reps.reserve(static_cast<std::size_t>(n));
    closed_reps.reserve(static_cast<std::size_t>(n));

    for (Vertex v = 0; v < n; ++v) {
        const auto degree = g.degree(v);
        auto& open_bucket = open_reps[{open_hash[v], degree}];
        auto open_match = std::find_if(open_bucket.begin(), open_bucket.end(),
                                       [&](Vertex rep) { return open_equal(g, rep, v); });
        if (open_match != open_bucket.end()) {
            classes.unite(*open_match, v);
            continue;
        }
        open_bucket.push_back(v);

        // Closed neighborhood N[v] hashes to the open hash plus v itself.
        auto& closed_bucket = closed_reps[{open_hash[v] + mix(static_cast<std::uint64_t>(v)), degree}];
        auto closed_match = std::find_if(closed_bucket.begin(), closed_bucket.end(),
                                         [&](Vertex rep) { return closed_equal(g, rep, v); });
        if (closed_match != closed_bucket.end())
            classes.unite(*closed_match, v);
        else
            closed_bucket.push_back(v);
    }

    TypePartition partition;
    partition.type_of.assign(static_cast<std::size_t>(n), -1);
    std::vector<TypeId> id_of_root(static_cast<std::size_t>(n), -1);
    for (Vertex v = 0; v < n; ++v) {
        const Vertex root = classes.find(v);
        if (id_of_root[root] < 0) {
            id_of_root[root] = partition.k();
            partition.classes.emplace_back();
        }
        partition.type_of[v] = id_of_root[root];
        partition.classes[id_of_root[root]].push_back(v);
    }
    partition.clique_flag.reserve(partition.classes.size());
    for (const auto& members : partition.classes)
        partition.clique_flag.push_back(members.size() >= 2 && g.adjacent(members[0], members[1]));
    return partition;
}

TypeGraph build_type_graph(const Graph& g, const TypePartition& partition)
{
    const TypeId k = partition.k();
    std::vector<int> sizes(static_cast<std::size_t>(k));
    for (TypeId t = 0; t < k; ++t)
        sizes[t] = partition.size(t);

    std::vector<int> count(static_cast<std::size_t>(k), 0);
    std::vector<TypeId> touched;
    std::vector<std::vector<TypeId>> adjacent_types(static_cast<std::size_t>(k));
    std::vector<bool> seen_type(static_cast<std::size_t>(k), false);
    std::vector<std::pair<TypeId, TypeId>> h_edges;

    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        const TypeId own = partition.type_of[v];
        touched.clear();
        for (Vertex u : g.neighbors(v)) {
            const TypeId t = partition.type_of[u];
            if (count[t]++ == 0)
                touched.push_back(t);
        }
        const int expected_inside = partition.clique_flag[own] ? sizes[own] - 1 : 0;
        if (count[own] != expected_inside)
            throw std::logic_error("type " + std::to_string(own) +
                                   " is neither a clique nor an independent set as flagged");
        std::vector<TypeId> across;
        for (TypeId t : touched) {
            if (t != own) {
                if (count[t] != sizes[t])
                    throw std::logic_error("types " + std::to_string(own) + " and " + std::to_string(t) +
                                           " are only partially joined");
                across.push_back(t);
            }
            count[t] = 0;
        }
        std::sort(across.begin(), across.end());
        if (!seen_type[own]) {
            seen_type[own] = true;
            adjacent_types[own] = std::move(across);
            for (TypeId t : adjacent_types[own])
                if (own < t)
                    h_edges.emplace_back(own, t);
        } else if (across != adjacent_types[own]) {
            throw std::logic_error("members of type " + std::to_string(own) +
                                   " disagree on adjacent types");
        }
    }
    return TypeGraph(std::move(sizes), partition.clique_flag, h_edges);
}

bool verify_partition(const Graph& g, const TypePartition& partition)
{
    const Vertex n = g.num_vertices();
    if (static_cast<Vertex>(partition.type_of.size()) != n ||
        partition.clique_flag.size() != partition.classes.size())
        return false;
    std::vector<char> covered(static_cast<std::size_t>(n), 0);
    for (TypeId t = 0; t < partition.k(); ++t) {
        const auto& members = partition.classes[t];
        if (members.empty())
            return false;
        for (Vertex v : members) {
            if (v < 0 || v >= n || covered[v] || partition.type_of[v] != t)
                return false;
            covered[v] = 1;
        }
    }
    if (std::find(covered.begin(), covered.end(), 0) != covered.end())
        return false;

    // Same-type is an equivalence, so comparing against one member suffices.
    for (TypeId t = 0; t < partition.k(); ++t) {
        const auto& members = partition.classes[t];
        for (std::size_t i = 1; i < members.size(); ++i)
            if (!same_type(g, members[0], members[i]))
                return false;
        const bool clique = members.size() >= 2 && g.adjacent(members[0], members[1]);
        if (partition.clique_flag[t] != clique)
            return false;
    }

    // Coarseness: two classes merge iff their representatives share an open
    // or a closed neighborhood.
    auto has_duplicate = [&](auto neighborhood) {
        std::vector<std::vector<Vertex>> keys;
        keys.reserve(partition.classes.size());
        for (const auto& members : partition.classes)
            keys.push_back(neighborhood(members[0]));
        std::sort(keys.begin(), keys.end());
        return std::adjacent_find(keys.begin(), keys.end()) != keys.end();
    };
    if (has_duplicate([&](Vertex v) {
            auto nbrs = g.neighbors(v);
            return std::vector<Vertex>(nbrs.begin(), nbrs.end());
        }))
        return false;
    return !has_duplicate([&](Vertex v) { return closed_neighborhood(g, v); });
}

namespace {

class CoverSearch {
public:
    explicit CoverSearch(const Graph& g) : g_(g) {}

    std::optional<std::vector<Vertex>> run(int budget)
    {
        std::vector<int> degree(static_cast<std::size_t>(g_.num_vertices()));
        std::size_t edges = 0;
        for (Vertex v = 0; v < g_.num_vertices(); ++v) {
            degree[v] = static_cast<int>(g_.degree(v));
            edges += g_.degree(v);
        }
        State state{std::vector<char>(degree.size(), 0), std::move(degree), edges / 2, {}};
        if (search(state, budget))
            return std::move(found_);
        return std::nullopt;
    }

private:
    struct State {
        std::vector<char> removed;
        std::vector<int> degree;
        std::size_t edges;
        std::vector<Vertex> cover;
    };

    void take(State& s, Vertex v) const
    {
        s.removed[v] = 1;
        s.cover.push_back(v);
        for (Vertex u : g_.neighbors(v))
            if (!s.removed[u]) {
                --s.degree[u];
                --s.edges;
            }
        s.degree[v] = 0;
    }

    bool search(State& s, int budget)
    {
        // Degree-one rule: the neighbor of a pendant vertex can always be taken.
        for (bool changed = true; changed;) {
            changed = false;
            for (Vertex v = 0; v < g_.num_vertices() && budget >= 0; ++v) {
                if (s.removed[v] || s.degree[v] != 1)
                    continue;
                for (Vertex u : g_.neighbors(v))
                    if (!s.removed[u]) {
                        take(s, u);
                        --budget;
                        changed = true;
                        break;
                    }
            }
        }
        if (budget < 0)
            return false;
        if (s.edges == 0) {
            found_ = s.cover;
            std::sort(found_.begin(), found_.end());
            return true;
        }
        Vertex pivot = -1;
        for (Vertex v = 0; v < g_.num_vertices(); ++v)
            if (!s.removed[v] && (pivot < 0 || s.degree[v] > s.degree[pivot]))
                pivot = v;
        if (budget == 0 || s.edges > static_cast<std::size_t>(budget) * s.degree[pivot])
            return false;

        State with = s;
        take(with, pivot);
        if (search(with, budget - 1))
            return true;

        if (s.degree[pivot] > budget)
            return false;
        State without = std::move(s);
        const int need = without.degree[pivot];
        for (Vertex u : g_.neighbors(pivot))
            if (!without.removed[u])
                take(without, u);
        return search(without, budget - need);
    }

    const Graph& g_;
    std::vector<Vertex> found_;
};

}  // namespace

std::optional<std::vector<Vertex>> compute_vertex_cover(const Graph& g, int budget)
{
    if (budget < 0)
        return std::nullopt;
    return CoverSearch(g).run(budget);
}

std::optional<std::vector<Vertex>> minimum_vertex_cover(const Graph& g, int max_budget)
{
    for (int budget = 0; budget <= max_budget; ++budget)
        if (auto cover = compute_vertex_cover(g, budget))
            return cover;
    return std::nullopt;
}

}  // namespace ndsolve
