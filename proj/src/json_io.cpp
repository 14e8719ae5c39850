#include "kostant/json_io.hpp"

namespace kostant {

json to_json(const DynkinDiagram& d)
{
    json arrows = json::array();
    for (int i = 1; i <= d.rank(); ++i)
        for (int j = 1; j <= d.rank(); ++j)
            if (d.arrows(i, j) > 0) arrows.push_back({i, j, d.arrows(i, j)});
    return {{"family", family_name(d.family())}, {"rank", d.rank()}, {"name", d.name()}, {"arrows", arrows}};
}

DynkinDiagram diagram_from_json(const json& j)
{
    try {
        if (j.contains("edges")) return graph_from_json(j).board();
        Family f = parse_family(j.at("family").get<std::string>());
        int n = j.at("rank").get<int>();
        if (!j.contains("arrows")) return build_diagram(f, n);
        if (n < 1) throw IllegalRank("rank must be at least 1");
        std::vector<int> a(static_cast<std::size_t>(n) * n, 0);
        for (const auto& t : j.at("arrows")) {
            int u = t.at(0).get<int>(), v = t.at(1).get<int>(), k = t.at(2).get<int>();
            if (u < 1 || u > n || v < 1 || v > n) throw IndexOutOfRange("arrow endpoint out of range");
            a[(u - 1) * n + (v - 1)] = k;
        }
        return DynkinDiagram(f, n, std::move(a));
    } catch (const json::exception& e) {
        throw ParseError(std::string("diagram JSON: ") + e.what());
    }
}

json to_json(const Configuration& c)
{
    return c.chips;
}

json to_json(const RootVector& r)
{
    return r.c;
}

json to_json(const GameBoard& b)
{
    return {{"diagram", to_json(b.diagram())}, {"mode", mode_name(b.mode())}, {"sources", b.sources()}};
}

json to_json(const GameTrace& t)
{
    json states = json::array();
    for (const auto& s : t.states) states.push_back(to_json(s));
    return {{"moves", t.moves}, {"states", states}, {"final", to_json(t.final())}};
}

json to_json(const RunResult& r)
{
    json j = to_json(r.trace);
    j["terminated"] = r.terminated();
    if (!r.terminated()) j["diverged"] = r.divergence == Divergence::ChipBound ? "chip-bound" : "step-limit";
    return j;
}

json to_json(const ConfigurationGraph& g)
{
    json nodes = json::array(), edges = json::array(), sinks = json::array();
    for (const auto& c : g.nodes) nodes.push_back(to_json(c));
    for (const auto& e : g.edges) edges.push_back({e.from, e.vertex, e.to});
    for (auto s : g.sinks) sinks.push_back(to_json(g.nodes[s]));
    return {{"nodes", nodes}, {"edges", edges}, {"sinks", sinks}, {"truncated", g.truncated}};
}

json to_json(const Dfa& a)
{
    json states = json::array(), accepting = json::array(), transitions = json::array();
    for (std::size_t q = 0; q < a.num_states(); ++q) {
        states.push_back(a.labels[q]);
        if (a.accepting[q]) accepting.push_back(q);
        for (int i = 1; i <= a.alphabet; ++i) transitions.push_back({q, i, a.next(q, i)});
    }
    return {{"alphabet", a.alphabet}, {"states", states},    {"initial", a.initial},
            {"trap", a.trap},         {"accepting", accepting}, {"transitions", transitions}};
}

json to_json(const Tableau& t)
{
    return t.rows;
}

json to_json(const SimpleGraph& g)
{
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return {{"vertices", g.num_vertices()}, {"edges", edges}};
}

SimpleGraph graph_from_json(const json& j)
{
    try {
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        int n = j.at("vertices").get<int>();
        return SimpleGraph(n, std::move(edges));
    } catch (const json::exception& e) {
        throw ParseError(std::string("graph JSON: ") + e.what());
    }
}

json to_json(const Certificate& c)
{
    json j = {{"kind", certificate_kind_name(c.kind)}, {"vertices", c.vertices}, {"affine", c.affine}};
    if (!c.arms.empty()) j["arms"] = c.arms;
    return j;
}

json to_json(const FinitenessVerdict& v)
{
    json j = {{"verdict", verdict_name(v.kind)}};
    if (v.final) j["final"] = to_json(*v.final);
    if (v.witness) j["certificate"] = to_json(*v.witness);
    return j;
}

json to_json(const HeightProfile& p)
{
    json finals = json::array();
    for (const auto& c : p.finals) finals.push_back(to_json(c));
    return {{"finals", finals}, {"heights", p.heights}};
}

json statuses_json(const GameBoard& b, const Configuration& c)
{
    json out = json::array();
    for (int v = 1; v <= b.rank(); ++v) out.push_back(status_name(status(b, c, v)));
    return out;
}

}  // namespace kostant
