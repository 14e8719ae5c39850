#include "kostant/game.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <sstream>
#include <unordered_map>

namespace kostant {

std::string status_name(Status s)
{
    switch (s) {
    case Status::Sad: return "sad";
    case Status::Happy: return "happy";
    case Status::Excited: return "excited";
    }
    return "?";
}

std::string mode_name(Mode m)
{
    return m == Mode::Classic ? "classic" : "modified";
}

Mode parse_mode(const std::string& s)
{
    if (s == "classic") return Mode::Classic;
    if (s == "modified") return Mode::Modified;
    throw ModeMismatch("unknown mode '" + s + "'");
}

Int Configuration::total() const
{
    Int t = 0;
    for (Int x : chips) t = checked_add(t, x);
    return t;
}

std::string Configuration::str() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < chips.size(); ++i) os << (i ? "," : "") << chips[i];
    os << ')';
    return os.str();
}

GameBoard::GameBoard(DynkinDiagram d, Mode mode, std::vector<int> sources)
    : d_(std::move(d)), mode_(mode), is_source_(d_.rank(), 0)
{
    if (mode_ == Mode::Classic && !sources.empty()) throw ModeMismatch("classic boards have no sources");
    sources_ = normalize_vertex_set(d_.rank(), std::move(sources));
    for (int v : sources_) is_source_[v - 1] = 1;
}

GameBoard GameBoard::classic(DynkinDiagram d)
{
    return GameBoard(std::move(d), Mode::Classic, {});
}

GameBoard GameBoard::modified(DynkinDiagram d, std::vector<int> sources)
{
    return GameBoard(std::move(d), Mode::Modified, std::move(sources));
}

Configuration GameBoard::initial(int start_vertex) const
{
    Configuration c = Configuration::zero(rank());
    if (mode_ == Mode::Modified) {
        if (start_vertex != 0) throw ModeMismatch("modified games start from the zero configuration");
        return c;
    }
    if (start_vertex < 1 || start_vertex > rank())
        throw IndexOutOfRange("classic games need a start vertex in 1.." + std::to_string(rank()));
    c.chips[start_vertex - 1] = 1;
    return c;
}

GameBoard board_from_diagram(const DynkinDiagram& d, Mode mode, std::vector<int> sources)
{
    if (mode == Mode::Classic) {
        if (!sources.empty()) throw ModeMismatch("classic boards have no sources");
        return GameBoard::classic(d);
    }
    return GameBoard::modified(d, std::move(sources));
}

GameBoard board_from_dual(const DynkinDiagram& d, Mode mode, std::vector<int> sources)
{
    return board_from_diagram(dual(d), mode, std::move(sources));
}

namespace {

void check_config(const GameBoard& b, const Configuration& c)
{
    if (c.rank() != b.rank()) throw IndexOutOfRange("configuration length does not match the board");
}

void check_vertex(const GameBoard& b, int v)
{
    if (v < 1 || v > b.rank()) throw IndexOutOfRange("vertex " + std::to_string(v) + " out of range");
}

}  // namespace

Int neighbour_term(const GameBoard& b, const Configuration& c, int v)
{
    check_vertex(b, v);
    check_config(b, c);
    const auto& d = b.diagram();
    Int s = b.is_source(v) ? 1 : 0;
    for (int u = 1; u <= b.rank(); ++u) {
        int n = d.arrows(v, u);
        if (n) s = checked_add(s, checked_mul(n, c.chips[u - 1]));
    }
    return s;
}

Status status(const GameBoard& b, const Configuration& c, int v)
{
    Int rhs = neighbour_term(b, c, v);
    Int lhs = checked_mul(2, c.chips[v - 1]);
    if (lhs < rhs) return Status::Sad;
    if (lhs == rhs) return Status::Happy;
    return Status::Excited;
}

std::vector<int> sad_vertices(const GameBoard& b, const Configuration& c)
{
    std::vector<int> out;
    for (int v = 1; v <= b.rank(); ++v)
        if (status(b, c, v) == Status::Sad) out.push_back(v);
    return out;
}

bool is_terminal(const GameBoard& b, const Configuration& c)
{
    for (int v = 1; v <= b.rank(); ++v)
        if (status(b, c, v) == Status::Sad) return false;
    return true;
}

Configuration fire_unchecked(const GameBoard& b, const Configuration& c, int v)
{
    Configuration r = c;
    r.chips[v - 1] = checked_sub(neighbour_term(b, c, v), c.chips[v - 1]);
    return r;
}

Configuration fire(const GameBoard& b, const Configuration& c, int v)
{
    check_vertex(b, v);
    Status s = status(b, c, v);
    if (s != Status::Sad) throw IllegalMove(v, "vertex is " + status_name(s));
    return fire_unchecked(b, c, v);
}

Int default_max_chips(const DynkinDiagram& d)
{
    try {
        auto roots = positive_roots(d, 512);
        Int h = 0;
        for (const auto& r : roots) h = checked_add(h, r.height());
        return checked_mul(4, h);
    } catch (const NotFiniteType&) {
        return 1'000'000;
    }
}

RunResult run(const GameBoard& b, const Configuration& start, const Strategy& strategy, const Limits& limits)
{
    check_config(b, start);
    Int max_chips = limits.max_chips > 0 ? limits.max_chips : default_max_chips(b.diagram());
    std::mt19937_64 rng(strategy.seed);
    RunResult res;
    res.trace.states.push_back(start);
    for (;;) {
        const Configuration& cur = res.trace.states.back();
        std::vector<int> legal = sad_vertices(b, cur);
        if (legal.empty()) return res;
        if (cur.total() > max_chips) {
            res.divergence = Divergence::ChipBound;
            return res;
        }
        if (res.trace.moves.size() >= limits.max_steps) {
            res.divergence = Divergence::StepLimit;
            return res;
        }
        int v = legal.front();
        if (strategy.kind == Strategy::Kind::Random) {
            v = legal[rng() % legal.size()];
        } else if (strategy.kind == Strategy::Kind::Custom) {
            v = strategy.pick(cur, legal);
            if (std::find(legal.begin(), legal.end(), v) == legal.end()) throw IllegalMove(v, "strategy picked a vertex that is not sad");
        }
        Configuration next = fire(b, cur, v);
        res.trace.moves.push_back(v);
        res.trace.states.push_back(std::move(next));
    }
}

GameTrace replay(const GameBoard& b, const Configuration& start, const std::vector<int>& moves)
{
    check_config(b, start);
    GameTrace t;
    t.states.push_back(start);
    for (std::size_t k = 0; k < moves.size(); ++k) {
        int v = moves[k];
        if (v < 1 || v > b.rank() || status(b, t.states.back(), v) != Status::Sad) throw InvalidMoveAt(k + 1, v);
        t.states.push_back(fire_unchecked(b, t.states.back(), v));
        t.moves.push_back(v);
    }
    return t;
}

ConfigurationGraph explore(const GameBoard& b, const Configuration& start, const Limits& limits)
{
    check_config(b, start);
    Int max_chips = limits.max_chips > 0 ? limits.max_chips : default_max_chips(b.diagram());
    ConfigurationGraph g;
    std::unordered_map<Configuration, std::size_t, ConfigurationHash> index;
    g.nodes.push_back(start);
    index.emplace(start, 0);
    for (std::size_t k = 0; k < g.nodes.size(); ++k) {
        Configuration cur = g.nodes[k];
        std::vector<int> legal = sad_vertices(b, cur);
        if (legal.empty()) {
            g.sinks.push_back(k);
            continue;
        }
        if (cur.total() > max_chips) {
            g.truncated = true;
            continue;
        }
        for (int v : legal) {
            Configuration next = fire_unchecked(b, cur, v);
            auto it = index.find(next);
            std::size_t to;
            if (it != index.end()) {
                to = it->second;
            } else {
                if (g.nodes.size() >= limits.max_states) {
                    g.truncated = true;
                    continue;
                }
                to = g.nodes.size();
                index.emplace(next, to);
                g.nodes.push_back(std::move(next));
            }
            g.edges.push_back({k, v, to});
        }
    }
    return g;
}

int braid_length(const DynkinDiagram& d, int i, int j)
{
    switch (d.arrows(i, j) * d.arrows(j, i)) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: throw InvalidDiagram("edge multiplicity above 3");
    }
}

bool check_local_confluence(const GameBoard& b, const Configuration& c, int i, int j)
{
    check_vertex(b, i);
    check_vertex(b, j);
    check_config(b, c);
    if (i == j) return true;
    int m = braid_length(b.diagram(), i, j);
    Configuration x = c, y = c;
    for (int k = 0; k < m; ++k) {
        x = fire_unchecked(b, x, k % 2 ? j : i);
        y = fire_unchecked(b, y, k % 2 ? i : j);
    }
    return x == y;
}

}  // namespace kostant
