#pragma once

#include <map>
#include <string>
#include <vector>

#include "kostant/classification.hpp"

namespace kostant {

// Graphviz subset: [strict] (graph|digraph) [id] { stmts }, with node statements, edge chains,
// attribute lists, default-attribute statements (graph/node/edge [...]) and id = id lines.
// Comments (//, /* */, #) are skipped. Subgraphs and ports are not supported.
struct DotGraph {
    struct Edge {
        std::string from;
        std::string to;
        std::map<std::string, std::string> attrs;
    };

    bool directed = false;
    std::string name;
    std::vector<std::string> nodes;  // first-appearance order
    std::map<std::string, std::map<std::string, std::string>> node_attrs;
    std::vector<Edge> edges;
};

DotGraph parse_dot(const std::string& text);  // throws ParseError

// Undirected simple graph. Node names 1..n are kept; otherwise vertices are numbered by
// first appearance.
SimpleGraph graph_from_dot(const std::string& text);

std::string graph_to_dot(const SimpleGraph& g, const std::string& name = "G");

}  // namespace kostant
