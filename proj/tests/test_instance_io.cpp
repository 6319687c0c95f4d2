#include "doctest.h"
#include "fixtures.hpp"

#include "ndsolve/generators.hpp"
#include "ndsolve/instance_io.hpp"

using namespace ndsolve;
using namespace ndsolve::testing;

namespace {

int error_line(std::string_view text)
{
    try {
        parse_instance(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return -1;
}

}  // namespace

TEST_CASE("bare graph file")
{
    auto instance = parse_instance("p graph 3\ne 1 2\ne 2 3");
    REQUIRE(std::holds_alternative<Graph>(instance));
    const auto& g = std::get<Graph>(instance);
    CHECK(g.num_vertices() == 3);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
}

TEST_CASE("comments and blank lines are ignored")
{
    auto instance = parse_instance("# header follows\n\np graph 2  # two vertices\n\ne 1 2 # edge\n");
    CHECK(std::get<Graph>(instance).num_edges() == 1);
}

TEST_CASE("parse errors carry line numbers")
{
    CHECK(error_line("p graph 2\ne 1 1") == 2);
    CHECK(error_line("p graph 2\ne 1 3") == 2);
    CHECK(error_line("p graph 3\ne 1 2\ne 2 1") == 3);
    CHECK(error_line("e 1 2") == 1);
    CHECK(error_line("p graph 2\nfoo 1") == 2);
    CHECK(error_line("p graph 2\ne 1 x") == 2);
    CHECK(error_line("p graph 2\ne 1") == 2);
    CHECK(error_line("") == 0);
    CHECK(error_line("p graph 4\ne 1 2\nprecolor 1 1\nprecolor 2 1\ncolors 2") == 4);
    CHECK(error_line("p graph 4\nprecolor 1 3\ncolors 2") == 2);
    CHECK(error_line("p graph 4\nprecolor 1 1") == 0);
    CHECK(error_line("p graph 4\npair 1 2\npair 2 3") == 3);
    CHECK(error_line("p graph 4\npair 1 1") == 2);
    CHECK(error_line("p graph 4\npair 1 2\nvcolor 1 1") == 3);
    CHECK(error_line("p graph 2\nvcolor 1 1\nmotif 1 1") == 0);   // vertex 2 uncolored
    CHECK(error_line("p graph 1\nvcolor 1 1") == 0);              // empty motif
    CHECK(error_line("p graph 1\nvcolor 1 1\nmotif 1 0") == 3);
    CHECK(error_line("p graph 1\nvcolor 1 1\nmotif 1 1\nmotif 1 2") == 4);
}

TEST_CASE("annotated instances parse into their types")
{
    auto motif = std::get<MotifInstance>(parse_instance("p graph 2\ne 1 2\nvcolor 1 3\nvcolor 2 4\nmotif 3 1\nmotif 4 1"));
    CHECK(motif.vertex_color == std::vector<Color>{3, 4});
    CHECK(motif.motif_size() == 2);

    auto paths = std::get<PathsInstance>(parse_instance("p graph 4\ne 1 2\npair 1 2\npair 3 4"));
    CHECK(paths.pairs == std::vector<Edge>{{0, 1}, {2, 3}});

    auto pre = std::get<PrecolorInstance>(parse_instance("p graph 3\ncolors 2\nprecolor 3 2"));
    CHECK(pre.num_colors == 2);
    CHECK(pre.precolor[2] == 2);
    CHECK_FALSE(pre.precolor[0].has_value());
}

TEST_CASE("serialization of the one-vertex graph")
{
    CHECK(serialize_instance(Graph(1)) == "p graph 1\n");
}

TEST_CASE("round trip on K_{2,3}")
{
    Instance k23 = complete_bipartite(2, 3);
    CHECK(parse_instance(serialize_instance(k23)) == k23);
}

TEST_CASE("round trip property over random instances")
{
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 100; ++i) {
        const auto blueprint = small_template(rng, 4, 12);
        AnnotationParams params;
        params.pairs = std::min(2, blueprint.num_vertices() / 2);
        const auto problem = static_cast<Problem>(i % 3);
        const Instance original = random_instance(problem, blueprint, params, static_cast<std::uint64_t>(i));
        const auto text = serialize_instance(original);
        CAPTURE(text);
        CHECK(parse_instance(text) == original);
    }
}
