#include "doctest.h"
#include "fixtures.hpp"

#include "ndsolve/graph.hpp"
#include "ndsolve/witness.hpp"

using namespace ndsolve;
using namespace ndsolve::testing;

TEST_CASE("graph construction keeps sorted symmetric adjacency")
{
    auto g = make_graph(4, {{2, 0}, {0, 1}, {3, 2}});
    CHECK(g.num_vertices() == 4);
    CHECK(g.num_edges() == 3);
    auto n0 = g.neighbors(0);
    CHECK(std::vector<Vertex>(n0.begin(), n0.end()) == std::vector<Vertex>{1, 2});
    CHECK(g.adjacent(2, 3));
    CHECK(g.adjacent(3, 2));
    CHECK_FALSE(g.adjacent(1, 3));
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {2, 3}});
}

TEST_CASE("graph rejects self-loops, duplicates and bad ids")
{
    CHECK_THROWS_AS(make_graph(2, {{1, 1}}), InvalidInstance);
    CHECK_THROWS_AS(make_graph(3, {{0, 1}, {1, 0}}), InvalidInstance);
    CHECK_THROWS_AS(make_graph(2, {{0, 2}}), InvalidInstance);
}

TEST_CASE("induced subgraph relabels in the given order")
{
    auto g = path(4);
    std::vector<Vertex> keep{3, 2, 0};
    auto sub = g.induced(keep);
    CHECK(sub.num_vertices() == 3);
    CHECK(sub.adjacent(0, 1));
    CHECK_FALSE(sub.adjacent(1, 2));
}

TEST_CASE("connectivity of induced vertex sets")
{
    auto g = path(4);
    CHECK(induces_connected(g, std::vector<Vertex>{1, 2}));
    CHECK_FALSE(induces_connected(g, std::vector<Vertex>{0, 2}));
    CHECK_FALSE(induces_connected(g, std::vector<Vertex>{}));
    CHECK(induces_connected(g, std::vector<Vertex>{3}));
}

TEST_CASE("instance validators")
{
    SUBCASE("motif")
    {
        MotifInstance m{path(2), {1, 2}, {{1, 1}}};
        CHECK_NOTHROW(validate(m));
        m.motif.clear();
        CHECK_THROWS_AS(validate(m), InvalidInstance);
        MotifInstance uncolored{path(2), {1}, {{1, 1}}};
        CHECK_THROWS_AS(validate(uncolored), InvalidInstance);
    }
    SUBCASE("paths")
    {
        PathsInstance p{path(4), {{0, 3}}};
        CHECK_NOTHROW(validate(p));
        p.pairs.emplace_back(3, 1);
        CHECK_THROWS_AS(validate(p), InvalidInstance);
        PathsInstance same{path(4), {{2, 2}}};
        CHECK_THROWS_AS(validate(same), InvalidInstance);
    }
    SUBCASE("precolor")
    {
        PrecolorInstance p{path(2), {1, std::nullopt}, 2};
        CHECK_NOTHROW(validate(p));
        p.precolor[1] = 1;
        CHECK_THROWS_AS(validate(p), InvalidInstance);
        p.precolor[1] = 3;
        CHECK_THROWS_AS(validate(p), InvalidInstance);
    }
}

TEST_CASE("witness validators name the violated condition")
{
    MotifInstance m{path(3), {1, 2, 1}, {{1, 2}}};
    CHECK(check_witness(m, MotifWitness{{0, 2}}) == "vertex set is not connected");
    CHECK(check_witness(m, MotifWitness{{0, 1}}) == "color multiset differs from the motif");

    PathsInstance p{complete(4), {{0, 1}, {2, 3}}};
    CHECK(check_witness(p, PathsWitness{{{0, 1}, {2, 3}}}).empty());
    CHECK_FALSE(check_witness(p, PathsWitness{{{0, 2, 1}, {2, 3}}}).empty());
    CHECK_FALSE(check_witness(p, PathsWitness{{{0, 1}}}).empty());

    PathsInstance q{complete(4), {{0, 3}}};
    CHECK(check_witness(q, PathsWitness{{{0, 1, 2, 3}}}).empty());
    CHECK(check_witness(q, PathsWitness{{{0, 1, 2, 3}}}, true) == "path 1: two internal vertices of one type");

    PrecolorInstance c{path(3), {1, std::nullopt, std::nullopt}, 2};
    CHECK(check_witness(c, ColoringWitness{{1, 2, 1}}).empty());
    CHECK_FALSE(check_witness(c, ColoringWitness{{2, 1, 2}}).empty());
    CHECK_FALSE(check_witness(c, ColoringWitness{{1, 2, 2}}).empty());
    CHECK_FALSE(check_witness(c, ColoringWitness{{1, 2, 3}}).empty());
}
