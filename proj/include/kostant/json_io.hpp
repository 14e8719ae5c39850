#pragma once

#include <json.hpp>

#include "kostant/automaton.hpp"
#include "kostant/classification.hpp"
#include "kostant/correspondence.hpp"
#include "kostant/game.hpp"
#include "kostant/root_counting.hpp"
#include "kostant/tableaux.hpp"

namespace kostant {

using json = nlohmann::json;

inline constexpr const char* kSchema = "kostant/v1";

json to_json(const DynkinDiagram& d);
// {"family": "B", "rank": 2} builds the standard diagram; an "arrows" list [[i, j, n], ...]
// gives explicit arrow counts; {"vertices": n, "edges": [[u, v], ...]} gives a graph board.
DynkinDiagram diagram_from_json(const json& j);

json to_json(const Configuration& c);
json to_json(const RootVector& r);
json to_json(const GameBoard& b);
json to_json(const GameTrace& t);
json to_json(const RunResult& r);
json to_json(const ConfigurationGraph& g);
json to_json(const Dfa& a);
json to_json(const Tableau& t);
json to_json(const SimpleGraph& g);
json to_json(const Certificate& c);
json to_json(const FinitenessVerdict& v);
json to_json(const HeightProfile& p);

SimpleGraph graph_from_json(const json& j);

// Statuses of every vertex, e.g. ["sad", "happy"].
json statuses_json(const GameBoard& b, const Configuration& c);

}  // namespace kostant
