#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "copex/constructions.hpp"
#include "copex/io.hpp"
#include "copex/rgraph.hpp"

#include <sstream>

using namespace copex;

TEST_CASE("edge validation") {
    CHECK_THROWS_AS(RGraph(3, 4, {{0, 1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(RGraph(3, 3, {{0, 1, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(RGraph(3, 4, {{0, 1}}), std::invalid_argument);
    RGraph g(3, 4, {{2, 1, 0}, {0, 1, 2}});  // sorted + deduped
    CHECK(g.edge_count() == 1);
    CHECK(g.edges()[0] == Edge{0, 1, 2});
}

TEST_CASE("codegree on K4^3 and K4^3-") {
    RGraph k43 = named_construction("K43");
    CHECK(codegree(k43, {0, 1}) == 2);
    RGraph k43m = named_construction("K43-");
    // paper labels 1..4: S={2,3} -> 1
    CHECK(codegree(k43m, {1, 2}) == 1);
    RGraph edgeless(3, 5, {});
    CHECK(codegree(edgeless, {0, 1}) == 0);
    CHECK_THROWS_AS(codegree(k43, {0}), std::invalid_argument);
}

TEST_CASE("min positive codegree") {
    CHECK(min_pos_codegree(RGraph(3, 6, {})) == 0);
    CHECK(min_pos_codegree(named_construction("K43-")) == 1);
    CHECK(min_pos_codegree(named_construction("K43")) == 2);
    CHECK(min_pos_codegree(named_construction("Jk:4")) == 1);
}

TEST_CASE("link graph") {
    RGraph k43 = named_construction("K43");
    RGraph link = link_graph(k43, 3);
    CHECK(link.uniformity() == 2);
    CHECK(link.vertex_count() == 3);
    CHECK(link.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});

    RGraph f32 = named_construction("F32");
    RGraph l0 = link_graph(f32, 0);
    CHECK(l0.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});

    CHECK(link_graph(RGraph(3, 4, {}), 2).edge_count() == 0);
    CHECK_THROWS_AS(link_graph(RGraph(2, 3, {{0, 1}}), 0), std::invalid_argument);
}

TEST_CASE("suspension") {
    RGraph t2 = r_triangle(2);
    RGraph t3 = suspension(t2);
    CHECK(t3.uniformity() == 3);
    CHECK(t3.vertex_count() == 4);
    CHECK(t3.edge_count() == 3);
    CHECK(suspension(RGraph(2, 3, {})).vertex_count() == 4);
    RGraph e2(2, 2, {{0, 1}});
    CHECK(suspension(e2).edges() == std::vector<Edge>{{0, 1, 2}});
}

TEST_CASE("induced subgraph") {
    RGraph k43 = named_construction("K43");
    CHECK(induced_subgraph(k43, {0, 1, 2}).edge_count() == 1);
    RGraph f32 = named_construction("F32");
    CHECK(induced_subgraph(f32, {0, 1, 2}).edge_count() == 1);
    std::vector<int> everything = {0, 1, 2, 3, 4};
    CHECK(induced_subgraph(f32, everything) == f32);
    CHECK_THROWS_AS(induced_subgraph(f32, {0, 9}), std::invalid_argument);
}

TEST_CASE("text format round trip") {
    RGraph f32 = named_construction("F32");
    std::string text = graph_to_text(f32);
    CHECK(graph_from_text(text) == f32);
    // comments and blank lines are skipped
    std::istringstream is("# comment\n\n3 3 1\n# another\n0 1 2\n");
    auto g = read_graph(is);
    REQUIRE(g.has_value());
    CHECK(g->edge_count() == 1);
    CHECK(!read_graph(is).has_value());
}
