#include "ndsolve/precolor.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <set>
#include <stdexcept>

#include "ndsolve/motif.hpp"

namespace ndsolve {

std::vector<Vertex> ReducedInstance::kept_vertices() const
{
    std::vector<Vertex> kept;
    for (const auto& members : classes)
        kept.insert(kept.end(), members.begin(), members.end());
    std::sort(kept.begin(), kept.end());
    return kept;
}

PrecolorInstance ReducedInstance::materialize() const
{
    const auto kept = kept_vertices();
    PrecolorInstance result;
    result.graph = base->graph.induced(kept);
    result.num_colors = base->num_colors;
    for (Vertex v : kept)
        result.precolor.push_back(precolor[v]);
    return result;
}

ReducedInstance reduce_independent_types(const PrecolorInstance& base, const TypePartition& partition)
{
    ReducedInstance reduced;
    reduced.base = &base;
    reduced.precolor = base.precolor;
    reduced.classes.resize(static_cast<std::size_t>(partition.k()));
    reduced.frozen.assign(static_cast<std::size_t>(partition.k()), false);

    for (TypeId t = 0; t < partition.k(); ++t) {
        const auto& members = partition.classes[t];
        if (partition.clique_flag[t]) {
            reduced.classes[t] = members;
            reduced.active_types.push_back(t);
            continue;
        }
        std::optional<Color> some_color;
        std::vector<Vertex> uncolored;
        for (Vertex v : members) {
            if (base.precolor[v])
                some_color = some_color ? std::min(*some_color, *base.precolor[v]) : *base.precolor[v];
            else
                uncolored.push_back(v);
        }
        if (some_color || uncolored.empty()) {
            // Twins of a precolored vertex can always reuse its color.
            for (Vertex v : uncolored)
                reduced.precolor[v] = some_color;
            reduced.classes[t] = members;
            reduced.frozen[t] = true;
            reduced.frozen_types.push_back(t);
        } else {
            reduced.classes[t] = {uncolored.front()};
            reduced.collapsed.emplace(uncolored.front(), uncolored);
            reduced.active_types.push_back(t);
        }
    }
    return reduced;
}

std::vector<ColorCategory> compute_color_categories(const ReducedInstance& reduced, const TypePartition& partition)
{
    if (partition.k() > max_mask_types)
        throw std::length_error("neighborhood diversity too large for type-set masks");
    std::map<Color, std::uint64_t> occupied;
    for (TypeId t = 0; t < partition.k(); ++t) {
        std::set<Color> seen;
        for (Vertex v : reduced.classes[t]) {
            const auto& c = reduced.precolor[v];
            if (!c)
                continue;
            if (partition.clique_flag[t] && !seen.insert(*c).second)
                throw InvalidInstance("color " + std::to_string(*c) + " precolored twice inside a clique type");
            occupied[*c] |= std::uint64_t{1} << t;
        }
    }
    std::map<std::uint64_t, ColorCategory> by_mask;
    by_mask[0] = ColorCategory{0, {}, reduced.base->num_colors - static_cast<std::int64_t>(occupied.size())};
    for (const auto& [color, mask] : occupied) {
        auto& category = by_mask[mask];
        category.type_set = mask;
        category.colors.push_back(color);
        ++category.color_count;
    }
    std::vector<ColorCategory> result;
    for (auto& [mask, category] : by_mask)
        result.push_back(std::move(category));
    return result;
}

namespace {

bool independent_in(const TypeGraph& h, std::uint64_t set)
{
    for (auto m = set; m != 0; m &= m - 1)
        if (h.neighbor_mask(static_cast<TypeId>(std::countr_zero(m))) & set)
            return false;
    return true;
}

/// All independent sets of H that contain `base` and avoid `forbidden`.
void extend_independent(const TypeGraph& h, std::uint64_t current, TypeId from, std::uint64_t forbidden,
                        std::vector<std::uint64_t>& out)
{
    out.push_back(current);
    for (TypeId t = from; t < h.k(); ++t) {
        const auto bit = std::uint64_t{1} << t;
        if ((current | forbidden) & bit || h.neighbor_mask(t) & current)
            continue;
        extend_independent(h, current | bit, t + 1, forbidden, out);
    }
}

}  // namespace

PrecolorIlp build_precolor_ilp(const ReducedInstance& reduced, const std::vector<ColorCategory>& categories,
                               const TypeGraph& h)
{
    if (h.k() > max_mask_types)
        throw std::length_error("neighborhood diversity too large for type-set masks");
    std::uint64_t frozen_mask = 0;
    for (TypeId t : reduced.frozen_types)
        frozen_mask |= std::uint64_t{1} << t;

    PrecolorIlp ilp;
    std::vector<std::vector<int>> members_of_category(categories.size());
    for (std::size_t c = 0; c < categories.size(); ++c) {
        const auto base = categories[c].type_set;
        if (!independent_in(h, base))
            continue;   // a precolored conflict; the category admits no subcategory
        std::vector<std::uint64_t> sets;
        extend_independent(h, base, 0, frozen_mask, sets);
        std::sort(sets.begin(), sets.end());
        for (auto set : sets) {
            if (!independent_in(h, set))
                throw std::logic_error("subcategory enumeration produced adjacent types");
            const int var = ilp.problem.add_variable(0, categories[c].color_count);
            ilp.subcategories.push_back({static_cast<int>(c), set, var});
            members_of_category[c].push_back(var);
        }
    }

    const auto q = static_cast<std::size_t>(ilp.problem.num_vars());
    for (std::size_t c = 0; c < categories.size(); ++c) {
        std::vector<std::int64_t> row(q, 0);
        for (int var : members_of_category[c])
            row[var] = 1;
        ilp.problem.add_constraint(std::move(row), Relation::equal, categories[c].color_count);
    }
    for (TypeId t : reduced.active_types) {
        std::vector<std::int64_t> row(q, 0);
        for (const auto& sub : ilp.subcategories)
            if (sub.type_set >> t & 1)
                row[sub.variable] = 1;
        ilp.problem.add_constraint(std::move(row), Relation::equal, reduced.size(t));
    }
    return ilp;
}

ColoringWitness reconstruct_coloring(const ReducedInstance& reduced, const std::vector<ColorCategory>& categories,
                                     const PrecolorIlp& ilp, const IlpSolution& counts)
{
    const auto& base = *reduced.base;
    std::set<Color> precolored_colors;
    for (const auto& category : categories)
        precolored_colors.insert(category.colors.begin(), category.colors.end());

    // Unprecolored colors are drawn lazily in ascending order so that huge
    // budgets never get materialized.
    Color next_free = 1;
    auto draw_free = [&]() {
        while (precolored_colors.count(next_free))
            ++next_free;
        if (next_free > base.num_colors)
            throw std::logic_error("reconstruct_coloring: unprecolored colors exhausted");
        return next_free++;
    };

    std::vector<std::pair<Color, std::uint64_t>> placed;   // color -> occupied type set
    for (std::size_t c = 0; c < categories.size(); ++c) {
        std::size_t next_member = 0;
        for (const auto& sub : ilp.subcategories) {
            if (sub.category != static_cast<int>(c))
                continue;
            for (std::int64_t i = 0; i < counts.values[sub.variable]; ++i) {
                if (categories[c].type_set != 0) {
                    placed.emplace_back(categories[c].colors.at(next_member++), sub.type_set);
                } else if (sub.type_set != 0) {
                    placed.emplace_back(draw_free(), sub.type_set);
                }
            }
        }
    }
    std::sort(placed.begin(), placed.end());

    ColoringWitness witness;
    witness.color_of.assign(static_cast<std::size_t>(base.graph.num_vertices()), 0);
    for (std::size_t v = 0; v < reduced.precolor.size(); ++v)
        if (reduced.precolor[v])
            witness.color_of[v] = *reduced.precolor[v];

    for (TypeId t : reduced.active_types) {
        std::set<Color> present;
        std::vector<Vertex> uncolored;
        for (Vertex v : reduced.classes[t]) {
            if (reduced.precolor[v])
                present.insert(*reduced.precolor[v]);
            else
                uncolored.push_back(v);
        }
        std::size_t next_vertex = 0;
        for (const auto& [color, set] : placed) {
            if (!(set >> t & 1) || present.count(color))
                continue;
            if (next_vertex == uncolored.size())
                throw std::logic_error("reconstruct_coloring: more colors than vertices in a type");
            witness.color_of[uncolored[next_vertex++]] = color;
        }
        if (next_vertex != uncolored.size())
            throw std::logic_error("reconstruct_coloring: vertex pool of a type left uncolored");
    }
    for (const auto& [representative, members] : reduced.collapsed)
        for (Vertex v : members)
            witness.color_of[v] = witness.color_of[representative];
    return witness;
}

PrecolorReport solve_precolor(const PrecolorInstance& instance)
{
    const auto start = std::chrono::steady_clock::now();
    validate(instance);
    const auto partition = compute_type_partition(instance.graph);
    const auto h = build_type_graph(instance.graph, partition);
    const auto reduced = reduce_independent_types(instance, partition);
    const auto categories = compute_color_categories(reduced, partition);
    const auto ilp = build_precolor_ilp(reduced, categories, h);

    PrecolorReport report;
    report.stats.nd = partition.k();
    report.stats.ilp_vars = ilp.problem.num_vars();
    if (auto counts = solve_feasibility(ilp.problem)) {
        report.answer = true;
        report.witness = reconstruct_coloring(reduced, categories, ilp, *counts);
        if (auto problem = check_witness(instance, *report.witness); !problem.empty())
            throw std::logic_error("solve_precolor: reconstructed coloring invalid: " + problem);
    }
    report.stats.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace ndsolve
