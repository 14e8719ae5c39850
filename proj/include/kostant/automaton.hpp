#pragma once

#include <string>
#include <vector>

#include "kostant/root_system.hpp"
#include "kostant/weyl.hpp"

namespace kostant {

// Total DFA over letters 1..alphabet. The trap is absorbing and never accepting.
struct Dfa {
    int alphabet = 0;
    std::size_t initial = 0;
    std::size_t trap = 0;
    std::vector<std::string> labels;
    std::vector<char> accepting;
    std::vector<std::size_t> delta;  // delta[state * alphabet + letter - 1]

    std::size_t num_states() const noexcept { return labels.size(); }
    std::size_t next(std::size_t state, int letter) const;
};

// Element automaton: one state per element of W plus the trap. Reading letter i moves w to
// w s_i when the length goes up, otherwise to the trap; the accepting states are W^J. Reading
// a word left to right follows the word as written, so L = reduced words of elements of W^J.
Dfa build_dfa(const RootSystem& rs, const std::vector<int>& J, std::size_t max_states = 1'000'000);

// Configuration automaton: reachable configurations of the game with sources S\J plus the trap.
// Letters are moves in play order, every non-trap state accepts, and the language is the
// reversal of the element automaton's.
Dfa build_configuration_dfa(const DynkinDiagram& d, const std::vector<int>& J, std::size_t max_states = 1'000'000);

bool accepts(const Dfa& a, const Word& word);

// Accepted words of length <= max_len, shortlex order.
std::vector<Word> enumerate_language(const Dfa& a, std::size_t max_len);

// Moore partition refinement; merges equivalent states and keeps a single trap.
Dfa minimize(const Dfa& a);

// Doubled circles for accepting states, dashed edges into the trap, every transition listed.
std::string export_dot(const Dfa& a, const std::string& name = "dfa");

}  // namespace kostant
