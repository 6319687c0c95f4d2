#include "doctest.h"
#include "fixtures.hpp"

#include "ndsolve/nd.hpp"

using namespace ndsolve;
using namespace ndsolve::testing;

TEST_CASE("cliques have one type")
{
    for (Vertex n : {2, 5, 30}) {
        auto p = compute_type_partition(complete(n));
        CHECK(p.k() == 1);
        CHECK(p.clique_flag[0]);
    }
}

TEST_CASE("P_3 splits into ends and middle")
{
    auto p = compute_type_partition(path(3));
    REQUIRE(p.k() == 2);
    CHECK(p.classes[0] == std::vector<Vertex>{0, 2});
    CHECK(p.classes[1] == std::vector<Vertex>{1});
    CHECK_FALSE(p.clique_flag[0]);
    CHECK_FALSE(p.clique_flag[1]);
}

TEST_CASE("P_4 has four singleton types")
{
    auto g = path(4);
    CHECK(compute_type_partition(g).k() == 4);
    CHECK_FALSE(same_type(g, 0, 3));
    CHECK(brute_force_nd(g) == 4);
}

TEST_CASE("type ids follow the smallest member")
{
    // 0 and 3 are false twins, 1 and 2 are true twins.
    auto g = make_graph(4, {{0, 1}, {0, 2}, {1, 2}, {3, 1}, {3, 2}});
    auto p = compute_type_partition(g);
    REQUIRE(p.k() == 2);
    CHECK(p.classes[0] == std::vector<Vertex>{0, 3});
    CHECK(p.classes[1] == std::vector<Vertex>{1, 2});
    CHECK(p.clique_flag == std::vector<bool>{false, true});
    CHECK(compute_type_partition(g) == p);
}

TEST_CASE("type graph examples")
{
    SUBCASE("K_{2,3}")
    {
        auto g = complete_bipartite(2, 3);
        auto h = build_type_graph(g, compute_type_partition(g));
        REQUIRE(h.k() == 2);
        CHECK(h.adjacent(0, 1));
        CHECK(h.size(0) == 2);
        CHECK(h.size(1) == 3);
        CHECK_FALSE(h.clique(0));
        CHECK_FALSE(h.clique(1));
    }
    SUBCASE("K_5")
    {
        auto g = complete(5);
        auto h = build_type_graph(g, compute_type_partition(g));
        REQUIRE(h.k() == 1);
        CHECK(h.clique(0));
        CHECK(h.size(0) == 5);
        CHECK(h.edges().empty());
    }
    SUBCASE("two disjoint triangles")
    {
        auto g = make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
        auto h = build_type_graph(g, compute_type_partition(g));
        REQUIRE(h.k() == 2);
        CHECK(h.clique(0));
        CHECK(h.clique(1));
        CHECK_FALSE(h.adjacent(0, 1));
    }
}

TEST_CASE("build_type_graph rejects corrupted partitions")
{
    auto g = path(4);
    TypePartition bogus{{0, 1, 1, 0}, {{0, 3}, {1, 2}}, {false, true}};
    CHECK_THROWS_AS(build_type_graph(g, bogus), std::logic_error);
    TypePartition wrong_flag{{0, 1, 0}, {{0, 2}, {1}}, {true, false}};
    CHECK_THROWS_AS(build_type_graph(path(3), wrong_flag), std::logic_error);
}

TEST_CASE("verify_partition")
{
    CHECK(verify_partition(path(4), compute_type_partition(path(4))));
    TypePartition singletons{{0, 1, 2}, {{0}, {1}, {2}}, {false, false, false}};
    CHECK_FALSE(verify_partition(complete(3), singletons));
    TypePartition ends{{0, 1, 2, 0}, {{0, 3}, {1}, {2}}, {false, false, false}};
    CHECK_FALSE(verify_partition(path(4), ends));
    TypePartition overlap{{0, 0, 0}, {{0, 1}, {1, 2}}, {true, true}};
    CHECK_FALSE(verify_partition(complete(3), overlap));
}

TEST_CASE("partition matches the set-partition brute force on all graphs with n <= 5")
{
    for (Vertex n = 1; n <= 5; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
            auto g = graph_from_code(n, code);
            auto p = compute_type_partition(g);
            CAPTURE(n);
            CAPTURE(code);
            REQUIRE(p.k() == brute_force_nd(g));
            REQUIRE(verify_partition(g, p));
            REQUIRE_NOTHROW(build_type_graph(g, p));
        }
    }
}

TEST_CASE("vertex cover utility")
{
    CHECK(compute_vertex_cover(Graph(4), 0) == std::vector<Vertex>{});
    CHECK(compute_vertex_cover(path(3), 1) == std::vector<Vertex>{1});
    CHECK_FALSE(compute_vertex_cover(complete(4), 2).has_value());
    auto cover = compute_vertex_cover(complete(4), 3);
    REQUIRE(cover.has_value());
    CHECK(cover->size() == 3);
    CHECK_FALSE(compute_vertex_cover(path(2), -1).has_value());
}

TEST_CASE("vertex cover agrees with exhaustive subset search")
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 150; ++i) {
        const Vertex n = static_cast<Vertex>(uniform_int(rng, 1, 10));
        auto g = random_graph(n, 0.35, rng);
        int best = n;
        for (std::uint32_t s = 0; s < (1u << n); ++s) {
            bool covers = true;
            for (auto [u, v] : g.edges())
                covers = covers && ((s >> u & 1) || (s >> v & 1));
            if (covers)
                best = std::min(best, std::popcount(s));
        }
        auto found = minimum_vertex_cover(g, n);
        REQUIRE(found.has_value());
        CHECK(static_cast<int>(found->size()) == best);
        for (auto [u, v] : g.edges())
            CHECK((std::binary_search(found->begin(), found->end(), u) ||
                   std::binary_search(found->begin(), found->end(), v)));
        if (best > 0)
            CHECK_FALSE(compute_vertex_cover(g, best - 1).has_value());
    }
}
