#include <doctest.h>

#include <algorithm>
#include <random>

#include "kostant/classification.hpp"

using namespace kostant;

namespace {

SimpleGraph path(int n)
{
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
    return SimpleGraph(n, e);
}

SimpleGraph cycle(int n)
{
    auto e = path(n).edges();
    e.emplace_back(1, n);
    return SimpleGraph(n, e);
}

// Centre 1 with arms of the given lengths.
SimpleGraph star(std::vector<int> arms)
{
    std::vector<std::pair<int, int>> e;
    int next = 2;
    for (int len : arms) {
        int prev = 1;
        for (int k = 0; k < len; ++k) {
            e.emplace_back(prev, next);
            prev = next++;
        }
    }
    return SimpleGraph(next - 1, e);
}

std::vector<int> degrees(const SimpleGraph& g)
{
    std::vector<int> out;
    for (int v = 1; v <= g.num_vertices(); ++v) out.push_back(g.degree(v));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("simple graphs")
{
    SimpleGraph g(3, {{2, 1}, {3, 2}});
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
    CHECK(g.has_edge(2, 1));
    CHECK(g.degree(2) == 2);
    CHECK(g.connected());
    CHECK_FALSE(SimpleGraph(3, {{1, 2}}).connected());
    CHECK_THROWS_AS(SimpleGraph(3, {{1, 2}, {2, 1}}), InvalidDiagram);
    CHECK_THROWS_AS(SimpleGraph(3, {{1, 1}}), InvalidDiagram);
    CHECK(graph_of(build_diagram("D", 4)).degree(2) == 3);
    CHECK_THROWS_AS(graph_of(build_diagram("B", 3)), NotSimplyLaced);
}

TEST_CASE("certificates")
{
    auto tri = certificate(cycle(3));
    REQUIRE(tri);
    CHECK(tri->kind == Certificate::Kind::Cycle);
    CHECK(tri->affine == "~A2");

    auto k14 = certificate(star({1, 1, 1, 1}));
    REQUIRE(k14);
    CHECK(k14->kind == Certificate::Kind::HighDegree);

    CHECK_FALSE(certificate(star({1, 2, 4})));
    CHECK_FALSE(certificate(path(7)));

    auto e8t = certificate(star({1, 2, 5}));
    REQUIRE(e8t);
    CHECK(e8t->kind == Certificate::Kind::ArmInequality);
    CHECK(e8t->arms == std::vector<int>{1, 2, 5});
    CHECK(e8t->affine == "~E8");

    auto e6t = certificate(star({2, 2, 2}));
    REQUIRE(e6t);
    CHECK(e6t->affine == "~E6");
    auto e7t = certificate(star({1, 3, 3}));
    REQUIRE(e7t);
    CHECK(e7t->affine == "~E7");

    // Two branch points joined by a path of two edges.
    SimpleGraph h(7, {{1, 2}, {1, 3}, {1, 4}, {4, 5}, {5, 6}, {5, 7}});
    auto two = certificate(h);
    REQUIRE(two);
    CHECK(two->kind == Certificate::Kind::TwoBranchPoints);
    CHECK(two->affine == "~D6");

    CHECK_THROWS_AS(certificate(SimpleGraph(4, {{1, 2}, {3, 4}})), Disconnected);

    for (const auto& g : {cycle(5), star({1, 1, 1, 1}), star({1, 2, 5}), h})
        CHECK(check_certificate(g, *certificate(g)));
    Certificate fake{Certificate::Kind::Cycle, {1, 2, 3}, {}, "~A2"};
    CHECK_FALSE(check_certificate(path(3), fake));
}

TEST_CASE("finiteness verdicts")
{
    auto p5 = is_kostant_finite(path(5));
    CHECK(p5.kind == FinitenessVerdict::Kind::Finite);
    REQUIRE(p5.final);
    CHECK(*p5.final == Configuration({1, 1, 1, 1, 1}));

    auto c4 = is_kostant_finite(cycle(4));
    CHECK(c4.kind == FinitenessVerdict::Kind::Infinite);
    REQUIRE(c4.witness);
    CHECK(c4.witness->kind == Certificate::Kind::Cycle);

    auto e8t = is_kostant_finite(star({1, 2, 5}));
    CHECK(e8t.kind == FinitenessVerdict::Kind::Infinite);
    CHECK(e8t.witness->kind == Certificate::Kind::ArmInequality);

    CHECK(simulate_finiteness(cycle(3)).kind == FinitenessVerdict::Kind::Unknown);
    CHECK(simulate_finiteness(path(4)).kind == FinitenessVerdict::Kind::Finite);
}

TEST_CASE("affine extensions")
{
    for (int n = 2; n <= 7; ++n) {
        auto ext = affine_extension(build_diagram("A", n));
        CHECK(ext.graph == cycle(n + 1));
        CHECK(ext.new_vertex == n + 1);
        CHECK(ext.joined == std::vector<int>{1, n});
    }
    auto a1 = affine_extension(build_diagram("A", 1));
    CHECK(a1.double_edge);
    CHECK(a1.graph.edges().size() == 1);

    auto d4 = affine_extension(build_diagram("D", 4));
    CHECK(d4.joined == std::vector<int>{2});
    CHECK(d4.graph.degree(2) == 4);

    std::vector<DynkinDiagram> ade;
    for (int n = 1; n <= 8; ++n) ade.push_back(build_diagram("A", n));
    for (int n = 4; n <= 8; ++n) ade.push_back(build_diagram("D", n));
    for (int n = 6; n <= 8; ++n) ade.push_back(build_diagram("E", n));
    for (const auto& d : ade) {
        auto ext = affine_extension(d);
        if (ext.double_edge) continue;
        CAPTURE(d.name());
        CHECK(certificate(ext.graph).has_value());
        CHECK(is_kostant_finite(ext.graph).kind == FinitenessVerdict::Kind::Infinite);
    }
    auto e6 = affine_extension(build_diagram("E", 6)).graph;
    CHECK(degrees(e6) == degrees(star({2, 2, 2})));
    CHECK(certificate(e6)->affine == "~E6");
    CHECK_THROWS_AS(affine_extension(build_diagram("G", 2)), NotSimplyLaced);
}

TEST_CASE("affine graphs are infinite, ADE graphs are finite")
{
    std::vector<SimpleGraph> affine;
    for (int n = 2; n <= 8; ++n) affine.push_back(affine_graph(Family::A, n));
    for (int n = 4; n <= 8; ++n) affine.push_back(affine_graph(Family::D, n));
    for (int n = 6; n <= 8; ++n) affine.push_back(affine_graph(Family::E, n));
    for (const auto& g : affine) {
        CHECK(is_kostant_finite(g).kind == FinitenessVerdict::Kind::Infinite);
        CHECK(simulate_finiteness(g).kind != FinitenessVerdict::Kind::Finite);
    }
    CHECK(degrees(affine_graph(Family::D, 4)) == degrees(star({1, 1, 1, 1})));
    CHECK(certificate(affine_graph(Family::E, 7))->affine == "~E7");
    CHECK(affine_graph(Family::E, 8).num_vertices() == 9);

    for (int n = 1; n <= 8; ++n) CHECK(is_kostant_finite(graph_of(build_diagram("A", n))).kind == FinitenessVerdict::Kind::Finite);
    for (int n = 4; n <= 8; ++n) CHECK(is_kostant_finite(graph_of(build_diagram("D", n))).kind == FinitenessVerdict::Kind::Finite);
    for (int n = 6; n <= 8; ++n) CHECK(is_kostant_finite(graph_of(build_diagram("E", n))).kind == FinitenessVerdict::Kind::Finite);
}

TEST_CASE("connected graph counts")
{
    // OEIS A001349.
    std::vector<std::size_t> want{1, 1, 2, 6, 21, 112};
    for (int n = 1; n <= 6; ++n) CHECK(connected_graphs(n).size() == want[n - 1]);
}

TEST_CASE("both routes agree on all graphs up to 6 vertices")
{
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : connected_graphs(n)) {
            bool finite_cert = !certificate(g).has_value();
            auto sim = simulate_finiteness(g);
            CHECK(finite_cert == (sim.kind == FinitenessVerdict::Kind::Finite));
        }
}

TEST_CASE("supergraphs of the triangle stay infinite")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 4 + static_cast<int>(rng() % 4);
        std::vector<std::pair<int, int>> e{{1, 2}, {2, 3}, {1, 3}};
        for (int v = 4; v <= n; ++v) e.emplace_back(1 + static_cast<int>(rng() % (v - 1)), v);
        for (int extra = 0; extra < 3; ++extra) {
            int u = 1 + static_cast<int>(rng() % n), v = 1 + static_cast<int>(rng() % n);
            if (u == v) continue;
            auto p = std::minmax(u, v);
            if (std::find(e.begin(), e.end(), std::pair<int, int>{p.first, p.second}) == e.end()) e.emplace_back(p.first, p.second);
        }
        SimpleGraph g(n, e);
        CHECK(is_kostant_finite(g).kind == FinitenessVerdict::Kind::Infinite);
        CHECK(simulate_finiteness(g).kind != FinitenessVerdict::Kind::Finite);
    }
}
