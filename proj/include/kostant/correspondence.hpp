#pragma once

#include <vector>

#include "kostant/game.hpp"
#include "kostant/weyl.hpp"

namespace kostant {

// A vector of V' = V + span{beta_p : p in I}. source_part is indexed by the sorted sources.
struct ExtendedState {
    std::vector<Int> root_part;
    std::vector<Int> source_part;

    bool operator==(const ExtendedState&) const = default;
};

// beta = sum of beta_p, root part zero.
ExtendedState initial_extended_state(int rank, const std::vector<int>& I);

// <v, alpha_i^vee> with <beta_p, alpha_i^vee> = -delta_{pi}.
Int extended_pairing(const ExtendedState& s, int i, const IntMatrix& A, const std::vector<int>& I);
ExtendedState extended_reflect(const ExtendedState& s, int i, const IntMatrix& A, const std::vector<int>& I);
// -extended_pairing; a move at i is valid iff this is positive.
Int K_value(const ExtendedState& s, int i, const IntMatrix& A, const std::vector<int>& I);

// Letters of the word are the moves reversed, and back.
Word word_of_moves(const std::vector<int>& moves);
std::vector<int> moves_of_word(const Word& word);

// Applies the letters of word (rightmost first) to beta using cartan_matrix(d), whose
// reflection action is exactly the game on the board of d. Returns the root part.
Configuration simulate_word(const DynkinDiagram& d, const std::vector<int>& I, const Word& word);

// Checks each move algebraically (K > 0), then returns w = s_{i_t}...s_{i_1} after asserting that
// the word is reduced and w lies in W^{S\I}. Throws InvalidMoveAt (1-based step).
WeylElement verify_play(const RootSystem& rs, const std::vector<int>& I, const std::vector<int>& moves);

struct PlayWordPair {
    std::vector<int> moves;
    Word word;

    bool operator==(const PlayWordPair&) const = default;
    auto operator<=>(const PlayWordPair&) const = default;
};

// Every valid play from the zero configuration (all prefixes, or only terminal plays), sorted.
std::vector<PlayWordPair> enumerate_plays(const DynkinDiagram& d, const std::vector<int>& I, bool terminal_only,
                                          std::size_t max_plays = 5'000'000);

}  // namespace kostant
