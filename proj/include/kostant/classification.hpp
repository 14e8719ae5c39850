#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kostant/game.hpp"

namespace kostant {

// Vertices 1..n, undirected simple edges stored as (u, v) with u < v, sorted.
class SimpleGraph {
public:
    SimpleGraph() = default;
    SimpleGraph(int n, std::vector<std::pair<int, int>> edges);

    int num_vertices() const noexcept { return n_; }
    const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }
    bool has_edge(int u, int v) const;
    int degree(int v) const;
    std::vector<int> neighbours(int v) const;
    bool connected() const;
    DynkinDiagram board() const { return DynkinDiagram::from_edges(n_, edges_); }

    bool operator==(const SimpleGraph&) const = default;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
};

SimpleGraph graph_of(const DynkinDiagram& d);  // underlying simple graph; throws NotSimplyLaced

struct Certificate {
    enum class Kind { Cycle, HighDegree, TwoBranchPoints, ArmInequality };
    Kind kind;
    std::vector<int> vertices;  // cycle in order / the vertex / the two branch points / the branch point
    std::vector<int> arms;      // (p, q, r) ascending, ArmInequality only
    std::string affine;         // affine diagram the witness contains, e.g. "~A3", "~D4", "~E8"
};

std::string certificate_kind_name(Certificate::Kind k);

// First of: cycle, vertex of degree >= 4, two branch points, arms failing
// 1/(p+1) + 1/(q+1) + 1/(r+1) > 1. None means the graph is an A, D or E diagram.
std::optional<Certificate> certificate(const SimpleGraph& g);

// Checks that the witness really is present in g.
bool check_certificate(const SimpleGraph& g, const Certificate& c);

struct FinitenessVerdict {
    enum class Kind { Finite, Infinite, Unknown };
    Kind kind;
    std::optional<Configuration> final;   // Finite: the unique sink
    std::optional<Certificate> witness;   // Infinite: certificate route
};

std::string verdict_name(FinitenessVerdict::Kind k);

// Certificate route first; certificate-free graphs are confirmed by exploration from vertex 1.
FinitenessVerdict is_kostant_finite(const SimpleGraph& g, const Limits& limits = {});

// Simulation-only route: the classic game from every start vertex must terminate and the
// configuration graph from vertex 1 must have a single sink.
FinitenessVerdict simulate_finiteness(const SimpleGraph& g, const Limits& limits = {});

struct AffineExtension {
    SimpleGraph graph;
    int new_vertex = 0;        // always n + 1
    std::vector<int> joined;   // excited vertices of the classic final
    bool double_edge = false;  // A_1: the affine diagram has a doubled edge this graph cannot carry
};

// Joins a new vertex to every excited vertex of the classic final of d (simply laced only).
AffineExtension affine_extension(const DynkinDiagram& d);

// Simply-laced affine diagrams as graphs: "~A" (n >= 2, n+1 vertices), "~D" (n >= 4), "~E" (6, 7, 8).
SimpleGraph affine_graph(Family family, int n);

// Connected simple graphs on n vertices up to isomorphism (canonical adjacency masks), n <= 9.
std::vector<SimpleGraph> connected_graphs(int n);

}  // namespace kostant
