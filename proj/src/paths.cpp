#include "ndsolve/paths.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <map>
#include <stdexcept>


namespace ndsolve {

namespace {

bool links(const TypeGraph& h, TypeId a, TypeId b)
{
    return a == b ? h.clique(a) : h.adjacent(a, b);
}

/// For one start type, which (type set, last type) combinations admit an
/// ordering from the start; covers all subsets of H at once.
class RouteTable {
public:
    RouteTable(const TypeGraph& h, TypeId start) : h_(h), k_(h.k()), pred_((std::size_t{1} << k_) * k_, unreachable)
    {
        for (TypeId t = 0; t < k_; ++t)
            if (links(h, start, t))
                pred_[index(std::uint64_t{1} << t, t)] = from_start;
        const std::uint64_t end = std::uint64_t{1} << k_;
        for (std::uint64_t set = 1; set < end; ++set)
            for (TypeId last = 0; last < k_; ++last) {
                if (pred_[index(set, last)] == unreachable)
                    continue;
                for (TypeId next : h.neighbors(last))
                    if (!(set >> next & 1)) {
                        auto& slot = pred_[index(set | std::uint64_t{1} << next, next)];
                        if (slot == unreachable)
                            slot = static_cast<std::int8_t>(last);
                    }
            }
    }

    std::optional<std::vector<TypeId>> order(std::uint64_t route, TypeId end_type, TypeId start) const
    {
        if (route == 0) {
            if (links(h_, start, end_type))
                return std::vector<TypeId>{};
            return std::nullopt;
        }
        for (TypeId last = 0; last < k_; ++last) {
            if (!(route >> last & 1) || pred_[index(route, last)] == unreachable || !links(h_, last, end_type))
                continue;
            std::vector<TypeId> sequence;
            std::uint64_t set = route;
            TypeId current = last;
            for (;;) {
                sequence.push_back(current);
                const auto prev = pred_[index(set, current)];
                set &= ~(std::uint64_t{1} << current);
                if (prev == from_start)
                    break;
                current = prev;
            }
            std::reverse(sequence.begin(), sequence.end());
            return sequence;
        }
        return std::nullopt;
    }

private:
    static constexpr std::int8_t unreachable = -2;
    static constexpr std::int8_t from_start = -1;

    std::size_t index(std::uint64_t set, TypeId last) const { return static_cast<std::size_t>(set) * k_ + last; }

    const TypeGraph& h_;
    TypeId k_;
    std::vector<std::int8_t> pred_;
};

constexpr TypeId max_route_types = 24;

}  // namespace

std::optional<std::vector<TypeId>> route_order(const TypeGraph& h, std::uint64_t route, TypeId start_type,
                                               TypeId end_type)
{
    std::vector<TypeId> types;
    for (auto m = route; m != 0; m &= m - 1)
        types.push_back(static_cast<TypeId>(std::countr_zero(m)));
    const auto r = types.size();
    if (r == 0) {
        if (links(h, start_type, end_type))
            return std::vector<TypeId>{};
        return std::nullopt;
    }
    if (r > max_route_types)
        throw std::length_error("route too long for subset dynamic programming");

    // Held–Karp over the route's own types: pred[set][last].
    constexpr int unreachable = -2;
    std::vector<int> pred((std::size_t{1} << r) * r, unreachable);
    auto at = [r](std::size_t set, std::size_t last) { return set * r + last; };
    for (std::size_t i = 0; i < r; ++i)
        if (links(h, start_type, types[i]))
            pred[at(std::size_t{1} << i, i)] = -1;
    for (std::size_t set = 1; set < (std::size_t{1} << r); ++set)
        for (std::size_t last = 0; last < r; ++last) {
            if (pred[at(set, last)] == unreachable)
                continue;
            for (std::size_t next = 0; next < r; ++next)
                if (!(set >> next & 1) && h.adjacent(types[last], types[next]) &&
                    pred[at(set | std::size_t{1} << next, next)] == unreachable)
                    pred[at(set | std::size_t{1} << next, next)] = static_cast<int>(last);
        }
    const std::size_t full = (std::size_t{1} << r) - 1;
    for (std::size_t last = 0; last < r; ++last) {
        if (pred[at(full, last)] == unreachable || !links(h, types[last], end_type))
            continue;
        std::vector<TypeId> sequence;
        std::size_t set = full;
        int current = static_cast<int>(last);
        while (current >= 0) {
            sequence.push_back(types[current]);
            const int prev = pred[at(set, current)];
            set &= ~(std::size_t{1} << current);
            current = prev;
        }
        std::reverse(sequence.begin(), sequence.end());
        return sequence;
    }
    return std::nullopt;
}

bool route_is_valid(const TypeGraph& h, std::uint64_t route, TypeId start_type, TypeId end_type)
{
    return route_order(h, route, start_type, end_type).has_value();
}

std::vector<Vertex> simplify_path(const Graph& g, const TypePartition& partition, std::vector<Vertex> path)
{
    for (;;) {
        // Find the first internal position whose type recurs later inside the path.
        std::map<TypeId, std::size_t> last_seen;
        for (std::size_t i = 1; i + 1 < path.size(); ++i)
            last_seen[partition.type_of[path[i]]] = i;
        std::size_t x = 0;
        std::size_t y = 0;
        for (std::size_t i = 1; i + 1 < path.size(); ++i) {
            const auto j = last_seen[partition.type_of[path[i]]];
            if (j > i) {
                x = i;
                y = j;
                break;
            }
        }
        if (x == 0)
            return path;
        if (!g.adjacent(path[x], path[y + 1]))
            throw std::logic_error("simplify_path: shortcut edge missing; input is not a path of this graph");
        path.erase(path.begin() + static_cast<std::ptrdiff_t>(x) + 1,
                   path.begin() + static_cast<std::ptrdiff_t>(y) + 1);
    }
}

PathsIlp build_paths_ilp(const PathsInstance& instance, const TypePartition& partition, const TypeGraph& h)
{
    const TypeId k = h.k();
    std::map<std::pair<TypeId, TypeId>, int> demand;
    std::vector<int> terminals(static_cast<std::size_t>(k), 0);
    for (auto [s, t] : instance.pairs) {
        const TypeId a = partition.type_of[s];
        const TypeId b = partition.type_of[t];
        ++demand[{std::min(a, b), std::max(a, b)}];
        ++terminals[a];
        ++terminals[b];
    }

    PathsIlp ilp;
    if (demand.empty())
        return ilp;
    if (k > max_route_types)
        throw std::length_error("neighborhood diversity too large for route enumeration");

    std::map<TypeId, RouteTable> tables;
    const std::uint64_t end = std::uint64_t{1} << k;
    std::vector<std::pair<std::pair<TypeId, TypeId>, std::vector<int>>> groups;
    for (const auto& [types, count] : demand) {
        auto [a, b] = types;
        auto it = tables.try_emplace(a, h, a).first;
        std::vector<int> members;
        for (std::uint64_t route = 0; route < end; ++route) {
            auto order = it->second.order(route, b, a);
            if (!order)
                continue;
            const int var = ilp.problem.add_variable(0, count);
            ilp.categories.push_back({a, b, route, std::move(*order), var});
            members.push_back(var);
        }
        groups.emplace_back(types, std::move(members));
    }

    const auto q = static_cast<std::size_t>(ilp.problem.num_vars());
    for (const auto& [types, members] : groups) {
        std::vector<std::int64_t> row(q, 0);
        for (int var : members)
            row[var] = 1;
        ilp.problem.add_constraint(std::move(row), Relation::equal, demand[types]);
    }
    for (TypeId t = 0; t < k; ++t) {
        std::vector<std::int64_t> row(q, 0);
        bool used = false;
        for (const auto& category : ilp.categories)
            if (category.route >> t & 1) {
                row[category.variable] = 1;
                used = true;
            }
        if (used)
            ilp.problem.add_constraint(std::move(row), Relation::less_equal, h.size(t) - terminals[t]);
    }
    return ilp;
}

PathsWitness reconstruct_paths(const PathsInstance& instance, const TypePartition& partition,
                               const PathsIlp& ilp, const IlpSolution& counts)
{
    std::vector<char> terminal(static_cast<std::size_t>(instance.graph.num_vertices()), 0);
    for (auto [s, t] : instance.pairs)
        terminal[s] = terminal[t] = 1;
    std::vector<std::size_t> cursor(static_cast<std::size_t>(partition.k()), 0);
    auto take = [&](TypeId type) {
        const auto& members = partition.classes[type];
        auto& i = cursor[type];
        while (i < members.size() && terminal[members[i]])
            ++i;
        if (i == members.size())
            throw std::logic_error("reconstruct_paths: vertex pool of a type exhausted");
        return members[i++];
    };

    auto remaining = counts.values;
    PathsWitness witness;
    for (auto [s, t] : instance.pairs) {
        const TypeId ts = partition.type_of[s];
        const TypeId tt = partition.type_of[t];
        const TypeId a = std::min(ts, tt);
        const TypeId b = std::max(ts, tt);
        const PathCategory* chosen = nullptr;
        for (const auto& category : ilp.categories)
            if (category.start_type == a && category.end_type == b && remaining[category.variable] > 0) {
                chosen = &category;
                break;
            }
        if (chosen == nullptr)
            throw std::logic_error("reconstruct_paths: counts do not cover every pair");
        --remaining[chosen->variable];

        auto order = chosen->order;
        if (ts != a)
            std::reverse(order.begin(), order.end());
        std::vector<Vertex> path{s};
        for (TypeId type : order)
            path.push_back(take(type));
        path.push_back(t);
        for (std::size_t i = 1; i < path.size(); ++i)
            if (!instance.graph.adjacent(path[i - 1], path[i]))
                throw std::logic_error("reconstruct_paths: category produced a non-edge");
        witness.paths.push_back(std::move(path));
    }
    return witness;
}

PathsReport solve_paths(const PathsInstance& instance)
{
    const auto start = std::chrono::steady_clock::now();
    validate(instance);
    const auto partition = compute_type_partition(instance.graph);
    const auto h = build_type_graph(instance.graph, partition);

    PathsReport report;
    report.stats.nd = partition.k();
    const auto ilp = build_paths_ilp(instance, partition, h);
    report.stats.ilp_vars = ilp.problem.num_vars();
    if (auto counts = solve_feasibility(ilp.problem)) {
        report.answer = true;
        report.witness = reconstruct_paths(instance, partition, ilp, *counts);
    }
    report.stats.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace ndsolve
