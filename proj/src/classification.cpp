#include "kostant/classification.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <unordered_set>

namespace kostant {

SimpleGraph::SimpleGraph(int n, std::vector<std::pair<int, int>> edges) : n_(n)
{
    if (n < 1) throw IllegalRank("graph needs at least one vertex");
    for (auto [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n) throw IndexOutOfRange("edge endpoint out of range");
        if (u == v) throw InvalidDiagram("self-loop at vertex " + std::to_string(u));
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) throw InvalidDiagram("repeated edge");
}

bool SimpleGraph::has_edge(int u, int v) const
{
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(std::min(u, v), std::max(u, v)));
}

int SimpleGraph::degree(int v) const
{
    return static_cast<int>(std::count_if(edges_.begin(), edges_.end(),
                                          [v](const auto& e) { return e.first == v || e.second == v; }));
}

std::vector<int> SimpleGraph::neighbours(int v) const
{
    std::vector<int> out;
    for (auto [a, b] : edges_) {
        if (a == v) out.push_back(b);
        if (b == v) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool SimpleGraph::connected() const
{
    std::vector<char> seen(n_ + 1, 0);
    std::vector<int> stack{1};
    seen[1] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : neighbours(v))
            if (!seen[u]) {
                seen[u] = 1;
                ++count;
                stack.push_back(u);
            }
    }
    return count == n_;
}

SimpleGraph graph_of(const DynkinDiagram& d)
{
    if (!d.simply_laced()) throw NotSimplyLaced(d.name() + " is not simply laced");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= d.rank(); ++i)
        for (int j = i + 1; j <= d.rank(); ++j)
            if (d.adjacent(i, j)) edges.emplace_back(i, j);
    return SimpleGraph(d.rank(), std::move(edges));
}

std::string certificate_kind_name(Certificate::Kind k)
{
    switch (k) {
    case Certificate::Kind::Cycle: return "cycle";
    case Certificate::Kind::HighDegree: return "high-degree";
    case Certificate::Kind::TwoBranchPoints: return "two-branch-points";
    case Certificate::Kind::ArmInequality: return "arm-inequality";
    }
    return "?";
}

std::string verdict_name(FinitenessVerdict::Kind k)
{
    switch (k) {
    case FinitenessVerdict::Kind::Finite: return "finite";
    case FinitenessVerdict::Kind::Infinite: return "infinite";
    case FinitenessVerdict::Kind::Unknown: return "unknown";
    }
    return "?";
}

namespace {

std::vector<int> find_cycle(const SimpleGraph& g)
{
    int n = g.num_vertices();
    std::vector<int> parent(n + 1, 0), depth(n + 1, -1);
    std::vector<int> stack{1};
    depth[1] = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbours(v)) {
            if (u == parent[v]) continue;
            if (depth[u] < 0) {
                depth[u] = depth[v] + 1;
                parent[u] = v;
                stack.push_back(u);
                continue;
            }
            // Non-tree edge v-u: join the two tree paths at their common ancestor.
            std::vector<int> a{v}, b{u};
            while (a.back() != b.back()) {
                if (depth[a.back()] >= depth[b.back()]) a.push_back(parent[a.back()]);
                else b.push_back(parent[b.back()]);
            }
            b.pop_back();
            a.insert(a.end(), b.rbegin(), b.rend());
            return a;
        }
    }
    return {};
}

// Arm lengths at a degree-3 vertex of a tree, ascending.
std::vector<int> arm_lengths(const SimpleGraph& g, int centre)
{
    std::vector<int> arms;
    for (int start : g.neighbours(centre)) {
        int prev = centre, cur = start, len = 1;
        for (;;) {
            std::vector<int> nb = g.neighbours(cur);
            if (nb.size() != 2) break;
            int nxt = nb[0] == prev ? nb[1] : nb[0];
            prev = cur;
            cur = nxt;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    return arms;
}

bool arms_finite(const std::vector<int>& a)
{
    Int p = a[0] + 1, q = a[1] + 1, r = a[2] + 1;
    return q * r + p * r + p * q > p * q * r;
}

std::string arms_affine(const std::vector<int>& a)
{
    if (a[0] >= 2) return "~E6";
    if (a[1] >= 3) return "~E7";
    return "~E8";
}

}  // namespace

std::optional<Certificate> certificate(const SimpleGraph& g)
{
    if (!g.connected()) throw Disconnected("graph is not connected");
    if (auto cyc = find_cycle(g); !cyc.empty()) {
        std::string name = "~A" + std::to_string(cyc.size() - 1);
        return Certificate{Certificate::Kind::Cycle, std::move(cyc), {}, name};
    }
    std::vector<int> branch;
    for (int v = 1; v <= g.num_vertices(); ++v) {
        int deg = g.degree(v);
        if (deg >= 4) return Certificate{Certificate::Kind::HighDegree, {v}, {}, "~D4"};
        if (deg == 3) branch.push_back(v);
    }
    if (branch.size() >= 2) {
        // Tree distance between the first two branch points fixes the ~D_n witness.
        std::vector<int> dist(g.num_vertices() + 1, -1);
        std::deque<int> q{branch[0]};
        dist[branch[0]] = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int u : g.neighbours(v))
                if (dist[u] < 0) {
                    dist[u] = dist[v] + 1;
                    q.push_back(u);
                }
        }
        return Certificate{Certificate::Kind::TwoBranchPoints, {branch[0], branch[1]}, {},
                           "~D" + std::to_string(dist[branch[1]] + 4)};
    }
    if (branch.size() == 1) {
        std::vector<int> arms = arm_lengths(g, branch[0]);
        if (!arms_finite(arms))
            return Certificate{Certificate::Kind::ArmInequality, {branch[0]}, arms, arms_affine(arms)};
    }
    return std::nullopt;
}

bool check_certificate(const SimpleGraph& g, const Certificate& c)
{
    auto in_range = [&](int v) { return v >= 1 && v <= g.num_vertices(); };
    for (int v : c.vertices)
        if (!in_range(v)) return false;
    switch (c.kind) {
    case Certificate::Kind::Cycle: {
        std::set<int> distinct(c.vertices.begin(), c.vertices.end());
        if (c.vertices.size() < 3 || distinct.size() != c.vertices.size()) return false;
        for (std::size_t k = 0; k < c.vertices.size(); ++k)
            if (!g.has_edge(c.vertices[k], c.vertices[(k + 1) % c.vertices.size()])) return false;
        return true;
    }
    case Certificate::Kind::HighDegree:
        return c.vertices.size() == 1 && g.degree(c.vertices[0]) >= 4;
    case Certificate::Kind::TwoBranchPoints:
        return c.vertices.size() == 2 && c.vertices[0] != c.vertices[1] && g.degree(c.vertices[0]) >= 3 &&
               g.degree(c.vertices[1]) >= 3;
    case Certificate::Kind::ArmInequality:
        if (c.vertices.size() != 1 || g.degree(c.vertices[0]) != 3 || !find_cycle(g).empty()) return false;
        return arm_lengths(g, c.vertices[0]) == c.arms && !arms_finite(c.arms);
    }
    return false;
}

FinitenessVerdict is_kostant_finite(const SimpleGraph& g, const Limits& limits)
{
    if (auto cert = certificate(g)) return {FinitenessVerdict::Kind::Infinite, std::nullopt, std::move(cert)};
    GameBoard b = GameBoard::classic(g.board());
    ConfigurationGraph cg = explore(b, b.initial(1), limits);
    if (cg.truncated || cg.sinks.size() != 1) return {FinitenessVerdict::Kind::Unknown, std::nullopt, std::nullopt};
    return {FinitenessVerdict::Kind::Finite, cg.nodes[cg.sinks[0]], std::nullopt};
}

FinitenessVerdict simulate_finiteness(const SimpleGraph& g, const Limits& limits)
{
    if (!g.connected()) throw Disconnected("graph is not connected");
    GameBoard b = GameBoard::classic(g.board());
    Limits lim = limits;
    if (lim.max_chips <= 0) lim.max_chips = default_max_chips(b.diagram());
    std::optional<Configuration> sink;
    for (int v = 1; v <= g.num_vertices(); ++v) {
        RunResult r = run(b, b.initial(v), Strategy::first_sad(), lim);
        if (!r.terminated()) return {FinitenessVerdict::Kind::Unknown, std::nullopt, std::nullopt};
        if (sink && !(*sink == r.trace.final())) return {FinitenessVerdict::Kind::Unknown, std::nullopt, std::nullopt};
        sink = r.trace.final();
    }
    ConfigurationGraph cg = explore(b, b.initial(1), lim);
    if (cg.truncated || cg.sinks.size() != 1) return {FinitenessVerdict::Kind::Unknown, std::nullopt, std::nullopt};
    return {FinitenessVerdict::Kind::Finite, cg.nodes[cg.sinks[0]], std::nullopt};
}

AffineExtension affine_extension(const DynkinDiagram& d)
{
    SimpleGraph base = graph_of(d);
    GameBoard b = GameBoard::classic(d);
    RunResult r = run(b, b.initial(1));
    if (!r.terminated()) throw NonTerminating("classic game on " + d.name() + " does not terminate");
    AffineExtension ext;
    int n = d.rank();
    ext.new_vertex = n + 1;
    std::vector<std::pair<int, int>> edges = base.edges();
    for (int v = 1; v <= n; ++v)
        if (status(b, r.trace.final(), v) == Status::Excited) {
            ext.joined.push_back(v);
            edges.emplace_back(v, n + 1);
        }
    ext.graph = SimpleGraph(n + 1, std::move(edges));
    ext.double_edge = (n == 1);
    return ext;
}

namespace {

SimpleGraph star_with_arms(const std::vector<int>& arms)
{
    std::vector<std::pair<int, int>> edges;
    int next = 2;
    for (int len : arms) {
        int prev = 1;
        for (int k = 0; k < len; ++k) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
    }
    return SimpleGraph(next - 1, std::move(edges));
}

}  // namespace

SimpleGraph affine_graph(Family family, int n)
{
    std::vector<std::pair<int, int>> edges;
    switch (family) {
    case Family::A:
        if (n < 2) throw IllegalRank("~A_n as a simple graph needs n >= 2");
        for (int i = 1; i <= n; ++i) edges.emplace_back(i, i + 1);
        edges.emplace_back(1, n + 1);
        return SimpleGraph(n + 1, std::move(edges));
    case Family::D:
        if (n < 4) throw IllegalRank("~D_n needs n >= 4");
        edges = {{1, 3}, {2, 3}};
        for (int i = 3; i < n - 1; ++i) edges.emplace_back(i, i + 1);
        edges.emplace_back(n - 1, n);
        edges.emplace_back(n - 1, n + 1);
        return SimpleGraph(n + 1, std::move(edges));
    case Family::E:
        if (n == 6) return star_with_arms({2, 2, 2});
        if (n == 7) return star_with_arms({1, 3, 3});
        if (n == 8) return star_with_arms({1, 2, 5});
        throw IllegalRank("~E_n needs n in {6, 7, 8}");
    default:
        throw InvalidDiagram("no simply-laced affine family " + family_name(family));
    }
}

namespace {

using Mask = std::uint64_t;

int pair_bit(int i, int j)  // 0-based, i < j
{
    return j * (j - 1) / 2 + i;
}

bool mask_edge(Mask m, int i, int j)
{
    if (i > j) std::swap(i, j);
    return (m >> pair_bit(i, j)) & 1;
}

// Colour refinement, then the least mask over all orderings that respect the refined cells.
Mask canonical_mask(int n, Mask m)
{
    std::vector<int> colour(n);
    for (int v = 0; v < n; ++v) {
        colour[v] = 0;
        for (int u = 0; u < n; ++u)
            if (u != v && mask_edge(m, u, v)) ++colour[v];
    }
    for (;;) {
        std::map<std::vector<int>, int> rank;
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) {
            sig[v].push_back(colour[v]);
            std::vector<int> nb;
            for (int u = 0; u < n; ++u)
                if (u != v && mask_edge(m, u, v)) nb.push_back(colour[u]);
            std::sort(nb.begin(), nb.end());
            sig[v].insert(sig[v].end(), nb.begin(), nb.end());
            rank.emplace(sig[v], 0);
        }
        int k = 0;
        for (auto& [s, r] : rank) r = k++;
        std::vector<int> next(n);
        for (int v = 0; v < n; ++v) next[v] = rank[sig[v]];
        std::set<int> before(colour.begin(), colour.end());
        colour = std::move(next);
        if (static_cast<int>(rank.size()) == static_cast<int>(before.size())) break;
    }
    std::vector<std::vector<int>> cells;
    int max_colour = *std::max_element(colour.begin(), colour.end());
    for (int c = 0; c <= max_colour; ++c) {
        std::vector<int> cell;
        for (int v = 0; v < n; ++v)
            if (colour[v] == c) cell.push_back(v);
        if (!cell.empty()) cells.push_back(std::move(cell));
    }
    Mask best = ~Mask{0};
    std::vector<int> order;
    for (auto& cell : cells) order.insert(order.end(), cell.begin(), cell.end());
    // Enumerate the product of per-cell permutations (odometer over next_permutation).
    for (auto& cell : cells) std::sort(cell.begin(), cell.end());
    for (;;) {
        order.clear();
        for (auto& cell : cells) order.insert(order.end(), cell.begin(), cell.end());
        Mask code = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if (mask_edge(m, order[i], order[j])) code |= Mask{1} << pair_bit(i, j);
        best = std::min(best, code);
        std::size_t c = 0;
        while (c < cells.size() && !std::next_permutation(cells[c].begin(), cells[c].end())) ++c;
        if (c == cells.size()) break;
    }
    return best;
}

bool mask_connected(int n, Mask m)
{
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < n; ++u)
            if (!seen[u] && u != v && mask_edge(m, u, v)) {
                seen[u] = 1;
                ++count;
                stack.push_back(u);
            }
    }
    return count == n;
}

}  // namespace

std::vector<SimpleGraph> connected_graphs(int n)
{
    if (n < 1 || n > 9) throw IllegalRank("connected_graphs supports 1..9 vertices");
    // Every connected graph on k+1 vertices is a connected graph on k vertices plus a vertex
    // joined to a nonempty subset (remove a non-cut vertex).
    std::set<Mask> level{0};
    for (int k = 1; k < n; ++k) {
        std::set<Mask> next;
        for (Mask m : level)
            for (Mask sub = 1; sub < (Mask{1} << k); ++sub) {
                Mask grown = m;
                for (int i = 0; i < k; ++i)
                    if ((sub >> i) & 1) grown |= Mask{1} << pair_bit(i, k);
                next.insert(canonical_mask(k + 1, grown));
            }
        level = std::move(next);
    }
    std::vector<SimpleGraph> out;
    for (Mask m : level) {
        if (!mask_connected(n, m)) continue;
        std::vector<std::pair<int, int>> edges;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if (mask_edge(m, i, j)) edges.emplace_back(i + 1, j + 1);
        out.emplace_back(n, std::move(edges));
    }
    return out;
}

}  // namespace kostant
