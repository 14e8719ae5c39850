#include <doctest.h>

#include "kostant/dot.hpp"
#include "kostant/json_io.hpp"

using namespace kostant;

TEST_CASE("parse undirected DOT")
{
    auto g = graph_from_dot("graph tri {\n  // a triangle\n  1 -- 2 -- 3;\n  3 -- 1 [color=red];\n}\n");
    CHECK(g.num_vertices() == 3);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});

    auto named = graph_from_dot("strict graph { a -- b; b -- c; c -- d; b -- e }");
    CHECK(named.num_vertices() == 5);
    CHECK(named.degree(2) == 3);

    auto lone = graph_from_dot("graph { x; }");
    CHECK(lone.num_vertices() == 1);
}

TEST_CASE("parse directed DOT with attributes")
{
    DotGraph d = parse_dot(R"(digraph "dfa" {
  rankdir=LR;
  node [shape=circle];
  q0 [label="e", shape=doublecircle];
  q0 -> q1 [label="s1"];
  /* block */ q1 -> trap [label="s1", style=dashed];
})");
    CHECK(d.directed);
    CHECK(d.name == "dfa");
    CHECK(d.nodes == std::vector<std::string>{"q0", "q1", "trap"});
    CHECK(d.node_attrs.at("q0").at("shape") == "doublecircle");
    REQUIRE(d.edges.size() == 2);
    CHECK(d.edges[1].attrs.at("style") == "dashed");
}

TEST_CASE("DOT errors")
{
    CHECK_THROWS_AS(parse_dot("graph { 1 -- }"), ParseError);
    CHECK_THROWS_AS(parse_dot("graph { 1 -- 2"), ParseError);
    CHECK_THROWS_AS(parse_dot("tree { }"), ParseError);
    CHECK_THROWS_AS(graph_from_dot("digraph { 1 -> 2 }"), ParseError);
    CHECK_THROWS_AS(graph_from_dot("graph { 1 -- 1 }"), ParseError);
}

TEST_CASE("DOT round trip")
{
    SimpleGraph g(5, {{1, 2}, {2, 3}, {3, 4}, {2, 5}});
    CHECK(graph_from_dot(graph_to_dot(g)) == g);
}

TEST_CASE("diagram JSON")
{
    auto b3 = build_diagram("B", 3);
    json j = to_json(b3);
    CHECK(j["family"] == "B");
    CHECK(j["rank"] == 3);
    CHECK(diagram_from_json(j) == b3);
    CHECK(diagram_from_json(json{{"family", "E"}, {"rank", 6}}) == build_diagram("E", 6));
    auto tri = diagram_from_json(json::parse(R"({"vertices": 3, "edges": [[1,2],[2,3],[1,3]]})"));
    CHECK(tri.family() == Family::Graph);
    CHECK(tri.arrows(1, 3) == 1);
    CHECK_THROWS_AS(diagram_from_json(json{{"family", "D"}, {"rank", 2}}), IllegalRank);
    CHECK_THROWS(diagram_from_json(json{{"rank", 2}}));
}

TEST_CASE("graph JSON")
{
    SimpleGraph g(4, {{1, 2}, {2, 3}, {3, 4}});
    CHECK(graph_from_json(to_json(g)) == g);
    CHECK_THROWS(graph_from_json(json::parse(R"({"vertices": 2, "edges": [[1,3]]})")));
}

TEST_CASE("trace and verdict JSON")
{
    auto b = GameBoard::modified(build_diagram("B", 2), {1, 2});
    json t = to_json(run(b, b.initial()));
    CHECK(t["final"] == json::array({4, 3}));
    CHECK(t["moves"].size() == 4);
    CHECK(t["terminated"] == true);
    CHECK(statuses_json(b, Configuration({0, 0})) == json::array({"sad", "sad"}));
    json v = to_json(is_kostant_finite(SimpleGraph(3, {{1, 2}, {2, 3}, {1, 3}})));
    CHECK(v["verdict"] == "infinite");
    CHECK(v["certificate"]["kind"] == "cycle");
}
