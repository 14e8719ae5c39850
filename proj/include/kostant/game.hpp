#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "kostant/root_system.hpp"

namespace kostant {

enum class Mode { Classic, Modified };
enum class Status { Sad, Happy, Excited };

std::string status_name(Status s);
std::string mode_name(Mode m);
Mode parse_mode(const std::string& s);

// Chips on the board vertices only; source chips are implicit (one per source).
struct Configuration {
    std::vector<Int> chips;

    Configuration() = default;
    explicit Configuration(std::vector<Int> c) : chips(std::move(c)) {}
    static Configuration zero(int rank) { return Configuration(std::vector<Int>(rank, 0)); }

    int rank() const noexcept { return static_cast<int>(chips.size()); }
    Int operator[](int v) const { return chips.at(v - 1); }  // 1-based
    Int total() const;
    std::string str() const;

    bool operator==(const Configuration&) const = default;
    auto operator<=>(const Configuration&) const = default;
};

struct ConfigurationHash {
    std::size_t operator()(const Configuration& c) const noexcept { return hash_ints(c.chips); }
};

class GameBoard {
public:
    static GameBoard classic(DynkinDiagram d);
    static GameBoard modified(DynkinDiagram d, std::vector<int> sources);

    const DynkinDiagram& diagram() const noexcept { return d_; }
    int rank() const noexcept { return d_.rank(); }
    Mode mode() const noexcept { return mode_; }
    const std::vector<int>& sources() const noexcept { return sources_; }
    bool is_source(int v) const { return v >= 1 && v <= rank() && is_source_[v - 1]; }

    // Classic boards need a start vertex; modified boards start from zero.
    Configuration initial(int start_vertex = 0) const;

private:
    GameBoard(DynkinDiagram d, Mode mode, std::vector<int> sources);

    DynkinDiagram d_;
    Mode mode_;
    std::vector<int> sources_;
    std::vector<char> is_source_;
};

GameBoard board_from_diagram(const DynkinDiagram& d, Mode mode, std::vector<int> sources = {});
GameBoard board_from_dual(const DynkinDiagram& d, Mode mode, std::vector<int> sources = {});

// Sum_u arrows(v,u) c_u + [v in I]: the neighbour term of the sad test and the fire rule.
Int neighbour_term(const GameBoard& b, const Configuration& c, int v);
Status status(const GameBoard& b, const Configuration& c, int v);
std::vector<int> sad_vertices(const GameBoard& b, const Configuration& c);
bool is_terminal(const GameBoard& b, const Configuration& c);

// Throws IllegalMove unless v is sad.
Configuration fire(const GameBoard& b, const Configuration& c, int v);
// The fire formula without the sad precondition (used for algebraic checks).
Configuration fire_unchecked(const GameBoard& b, const Configuration& c, int v);

// 4 * (sum of heights of positive roots) for finite-type boards, else 10^6. Every chip total
// reached on a finite board is bounded by the height of the sum of the positive roots.
Int default_max_chips(const DynkinDiagram& d);

struct Limits {
    std::size_t max_states = 1'000'000;
    Int max_chips = 0;  // 0 selects default_max_chips
    std::size_t max_steps = 1'000'000;
};

struct Strategy {
    enum class Kind { FirstSad, Random, Custom };
    Kind kind = Kind::FirstSad;
    std::uint64_t seed = 0;
    // Receives the configuration and its sad vertices (ascending); returns one of them.
    std::function<int(const Configuration&, const std::vector<int>&)> pick;

    static Strategy first_sad() { return {}; }
    static Strategy random(std::uint64_t seed) { return {Kind::Random, seed, nullptr}; }
    static Strategy custom(std::function<int(const Configuration&, const std::vector<int>&)> f)
    {
        return {Kind::Custom, 0, std::move(f)};
    }
};

struct GameTrace {
    std::vector<Configuration> states;  // states[0] is the start
    std::vector<int> moves;

    const Configuration& start() const { return states.front(); }
    const Configuration& final() const { return states.back(); }
};

enum class Divergence { None, ChipBound, StepLimit };

struct RunResult {
    GameTrace trace;
    Divergence divergence = Divergence::None;

    bool terminated() const noexcept { return divergence == Divergence::None; }
};

RunResult run(const GameBoard& b, const Configuration& start, const Strategy& strategy = {}, const Limits& limits = {});

// Replays a fixed move list; throws InvalidMoveAt on the first non-sad move.
GameTrace replay(const GameBoard& b, const Configuration& start, const std::vector<int>& moves);

struct ConfigurationGraph {
    struct Edge {
        std::size_t from;
        int vertex;
        std::size_t to;
    };
    std::vector<Configuration> nodes;  // BFS order, nodes[0] is the start
    std::vector<Edge> edges;
    std::vector<std::size_t> sinks;    // terminal nodes
    bool truncated = false;            // some node hit max_states or max_chips and was not expanded
};

ConfigurationGraph explore(const GameBoard& b, const Configuration& start, const Limits& limits = {});

// Order of s_i s_j from the arrow product: 2, 3, 4 or 6.
int braid_length(const DynkinDiagram& d, int i, int j);

// Diamond (non-adjacent) or braid (adjacent) identity of the fire maps at c, e.g. the
// hexagon f_i f_j f_i = f_j f_i f_j on a single edge.
bool check_local_confluence(const GameBoard& b, const Configuration& c, int i, int j);

}  // namespace kostant
