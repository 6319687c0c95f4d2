#include "doctest.h"
#include "fixtures.hpp"

#include "ndsolve/motif.hpp"
#include "ndsolve/oracles.hpp"

using namespace ndsolve;
using namespace ndsolve::testing;

namespace {

constexpr Color r = 1, g = 2, b = 3;

/// One vertex per type of the candidate, each colored from a distinct motif slot.
bool exhaustive_skeleton(const MotifInstance& instance, const TypePartition& partition, std::uint64_t mask)
{
    std::vector<TypeId> types;
    for (TypeId t = 0; t < partition.k(); ++t)
        if (mask >> t & 1)
            types.push_back(t);
    std::map<Color, int> left = instance.motif;
    std::function<bool(std::size_t)> rec = [&](std::size_t i) {
        if (i == types.size())
            return true;
        for (Vertex v : partition.classes[types[i]]) {
            auto it = left.find(instance.vertex_color[v]);
            if (it == left.end() || it->second == 0)
                continue;
            --it->second;
            if (rec(i + 1))
                return true;
            ++it->second;
        }
        return false;
    };
    return rec(0);
}

}  // namespace

TEST_CASE("K_3 colored r,g,b with motif {r,g}")
{
    MotifInstance instance{complete(3), {r, g, b}, {{r, 1}, {g, 1}}};
    auto report = solve_motif(instance);
    CHECK(report.answer);
    REQUIRE(report.witness);
    CHECK(report.witness->vertices == std::vector<Vertex>{0, 1});
    CHECK(report.stats.nd == 1);
    CHECK_FALSE(report.stats.ilp_vars.has_value());
}

TEST_CASE("P_3 colored r,g,r")
{
    MotifInstance rr{path(3), {r, g, r}, {{r, 2}}};
    CHECK_FALSE(solve_motif(rr).answer);
    CHECK_FALSE(oracle_motif(rr).answer);

    MotifInstance rgr{path(3), {r, g, r}, {{r, 2}, {g, 1}}};
    auto report = solve_motif(rgr);
    CHECK(report.answer);
    REQUIRE(report.witness);
    CHECK(report.witness->vertices == std::vector<Vertex>{0, 1, 2});
    CHECK(oracle_motif(rgr).answer);
}

TEST_CASE("a lone independent type cannot host two vertices")
{
    MotifInstance instance{Graph(3), {r, r, g}, {{r, 1}, {g, 1}}};
    CHECK_FALSE(solve_motif(instance).answer);
}

TEST_CASE("single-color motif short-circuits")
{
    MotifInstance instance{Graph(3), {r, r, g}, {{g, 1}}};
    auto report = solve_motif(instance);
    CHECK(report.answer);
    CHECK(report.witness->vertices == std::vector<Vertex>{2});
    MotifInstance missing{Graph(2), {r, r}, {{b, 1}}};
    CHECK_FALSE(solve_motif(missing).answer);
}

TEST_CASE("skeleton examples")
{
    // P_3: T0 = {0, 2} independent, T1 = {1}.
    auto p3 = path(3);
    auto partition = compute_type_partition(p3);
    REQUIRE(partition.k() == 2);
    REQUIRE(partition.classes[0] == std::vector<Vertex>{0, 2});

    MotifInstance forced{p3, {g, r, b}, {{r, 1}, {b, 1}}};
    auto skeleton = skeleton_exists(forced, partition, {0b11, true});
    REQUIRE(skeleton);
    CHECK(skeleton->chosen == std::vector<std::pair<TypeId, Vertex>>{{0, 2}, {1, 1}});

    MotifInstance unmatched{p3, {g, r, b}, {{g, 1}, {b, 1}}};
    CHECK_FALSE(skeleton_exists(unmatched, partition, {0b11, true}).has_value());
}

TEST_CASE("extension adds missing colors from the candidate types")
{
    // Star with center 0 (color g) and leaves 1..3 (colors r, r, b).
    auto star = make_graph(4, {{0, 1}, {0, 2}, {0, 3}});
    MotifInstance instance{star, {g, r, r, b}, {{r, 2}, {g, 1}}};
    auto partition = compute_type_partition(star);
    const CandidateTypeSet both{0b11, true};
    auto skeleton = skeleton_exists(instance, partition, both);
    REQUIRE(skeleton);
    auto witness = extend_skeleton(instance, partition, both, *skeleton);
    CHECK(witness.vertices == std::vector<Vertex>{0, 1, 2});
    CHECK(check_witness(instance, witness).empty());

    MotifInstance exact{star, {g, r, r, b}, {{r, 1}, {g, 1}}};
    auto s2 = skeleton_exists(exact, partition, both);
    REQUIRE(s2);
    CHECK(extend_skeleton(exact, partition, both, *s2).vertices.size() == 2);
}

TEST_CASE("types_connected")
{
    TypeGraph h({1, 1, 1}, {false, false, false}, {{0, 1}});
    CHECK(types_connected(h, 0b011));
    CHECK_FALSE(types_connected(h, 0b101));
    CHECK(types_connected(h, 0b100));
    CHECK_FALSE(types_connected(h, 0));
}

TEST_CASE("skeleton search agrees with exhaustive one-vertex-per-type search")
{
    std::mt19937_64 rng(41);
    int checked = 0;
    while (checked < 300) {
        const int k = static_cast<int>(uniform_int(rng, 1, 5));
        TypeTemplate blueprint = random_template(k, 5 * k, rng);
        for (auto& s : blueprint.sizes)
            s = std::min(s, 5);
        AnnotationParams params;
        params.colors = 3;
        params.motif_size = static_cast<int>(uniform_int(rng, 1, 6));
        auto instance = random_motif_instance(blueprint, params, rng());
        auto partition = compute_type_partition(instance.graph);
        auto h = build_type_graph(instance.graph, partition);
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << partition.k()); ++mask) {
            if (std::popcount(mask) > 4 || !types_connected(h, mask))
                continue;
            CHECK(skeleton_exists(instance, partition, {mask, true}).has_value() ==
                  exhaustive_skeleton(instance, partition, mask));
            ++checked;
        }
    }
}

TEST_CASE("yes answers ship valid witnesses and agree with the oracle")
{
    std::mt19937_64 rng(77);
    int yes = 0;
    for (int i = 0; i < 400; ++i) {
        auto blueprint = small_template(rng, 4, 12);
        AnnotationParams params;
        params.colors = static_cast<int>(uniform_int(rng, 1, 3));
        params.motif_size = static_cast<int>(uniform_int(rng, 1, 6));
        auto instance = random_motif_instance(blueprint, params, static_cast<std::uint64_t>(i));
        auto report = solve_motif(instance);
        CHECK(report.answer == oracle_motif(instance).answer);
        if (report.answer) {
            ++yes;
            REQUIRE(report.witness);
            CHECK(check_witness(instance, *report.witness).empty());
        }
    }
    CHECK(yes >= 200);
}
