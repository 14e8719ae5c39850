#include "kostant/correspondence.hpp"

#include <algorithm>

namespace kostant {

namespace {

// Position of vertex i among the sorted sources, or -1.
int source_slot(const std::vector<int>& I, int i)
{
    auto it = std::lower_bound(I.begin(), I.end(), i);
    return (it != I.end() && *it == i) ? static_cast<int>(it - I.begin()) : -1;
}

}  // namespace

ExtendedState initial_extended_state(int rank, const std::vector<int>& I)
{
    return {std::vector<Int>(rank, 0), std::vector<Int>(normalize_vertex_set(rank, I).size(), 1)};
}

Int extended_pairing(const ExtendedState& s, int i, const IntMatrix& A, const std::vector<int>& I)
{
    if (i < 1 || i > A.size()) throw IndexOutOfRange("vertex out of range");
    Int p = 0;
    for (int j = 0; j < A.size(); ++j) p = checked_add(p, checked_mul(s.root_part[j], A(i - 1, j)));
    std::vector<int> In = normalize_vertex_set(A.size(), I);
    if (int slot = source_slot(In, i); slot >= 0) p = checked_sub(p, s.source_part.at(slot));
    return p;
}

ExtendedState extended_reflect(const ExtendedState& s, int i, const IntMatrix& A, const std::vector<int>& I)
{
    ExtendedState r = s;
    r.root_part[i - 1] = checked_sub(r.root_part[i - 1], extended_pairing(s, i, A, I));
    return r;
}

Int K_value(const ExtendedState& s, int i, const IntMatrix& A, const std::vector<int>& I)
{
    return -extended_pairing(s, i, A, I);
}

Word word_of_moves(const std::vector<int>& moves)
{
    return Word(moves.rbegin(), moves.rend());
}

std::vector<int> moves_of_word(const Word& word)
{
    return std::vector<int>(word.rbegin(), word.rend());
}

Configuration simulate_word(const DynkinDiagram& d, const std::vector<int>& I, const Word& word)
{
    IntMatrix A = cartan_matrix(d);
    ExtendedState s = initial_extended_state(d.rank(), I);
    for (auto it = word.rbegin(); it != word.rend(); ++it) s = extended_reflect(s, *it, A, I);
    return Configuration(s.root_part);
}

WeylElement verify_play(const RootSystem& rs, const std::vector<int>& I, const std::vector<int>& moves)
{
    std::vector<int> In = normalize_vertex_set(rs.rank(), I);
    ExtendedState s = initial_extended_state(rs.rank(), In);
    for (std::size_t k = 0; k < moves.size(); ++k) {
        int v = moves[k];
        if (v < 1 || v > rs.rank() || K_value(s, v, rs.cartan(), In) <= 0) throw InvalidMoveAt(k + 1, v);
        s = extended_reflect(s, v, rs.cartan(), In);
    }
    Word word = word_of_moves(moves);
    WeylElement w = element_of(rs, word);
    if (!is_reduced(rs, word)) throw InternalInconsistency("valid play gives a non-reduced word " + word_string(word));
    if (!is_min_rep(rs, w, complement(rs.rank(), In)))
        throw InternalInconsistency("valid play gives " + word_string(word) + " outside W^J");
    return w;
}

std::vector<PlayWordPair> enumerate_plays(const DynkinDiagram& d, const std::vector<int>& I, bool terminal_only,
                                          std::size_t max_plays)
{
    GameBoard b = GameBoard::modified(d, I);
    std::vector<PlayWordPair> out;
    std::vector<int> moves;
    // Explicit stack of (configuration, remaining sad vertices).
    struct Frame {
        Configuration c;
        std::vector<int> todo;
        std::size_t next = 0;
    };
    std::vector<Frame> stack;
    auto push = [&](Configuration c) {
        std::vector<int> sad = sad_vertices(b, c);
        if (!terminal_only || sad.empty()) {
            if (out.size() >= max_plays) throw LimitExceeded("more than " + std::to_string(max_plays) + " plays");
            out.push_back({moves, word_of_moves(moves)});
        }
        stack.push_back({std::move(c), std::move(sad), 0});
    };
    push(b.initial());
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.next == f.todo.size()) {
            stack.pop_back();
            if (!moves.empty()) moves.pop_back();
            continue;
        }
        int v = f.todo[f.next++];
        Configuration next = fire_unchecked(b, f.c, v);
        moves.push_back(v);
        push(std::move(next));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace kostant
