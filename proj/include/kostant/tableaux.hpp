#pragma once

#include <string>
#include <vector>

#include "kostant/weyl.hpp"

namespace kostant {

// Weakly decreasing positive parts.
struct Partition {
    std::vector<int> parts;

    int size() const;
    bool operator==(const Partition&) const = default;
};

struct Tableau {
    std::vector<std::vector<int>> rows;

    Partition shape() const;
    int size() const;
    std::string ascii() const;
    bool operator==(const Tableau&) const = default;
    auto operator<=>(const Tableau&) const = default;
};

// One-line notation of the permutation of a word in S_n (s_i = (i, i+1), rightmost acts first).
std::vector<int> permutation_of(const Word& word, int n);

// lambda_i = w(k-i+1) - (k-i+1) for the Grassmannian permutation w. Throws NotReduced,
// NotGrassmannian (a descent other than k).
Partition grassmannian_shape(const Word& word, int k, int n);

// Move j at vertex i goes on the diagonal c - r = i - k (so i = k is the main diagonal,
// i < k below it, i > k above it), in the first free cell of that diagonal, in row-major order,
// whose upper and left neighbours are already filled. Throws InvalidPlay, PlacementImpossible.
Tableau play_to_tableau(const std::vector<int>& moves, int k, int n);

// Tableaux of every terminal play of the game on A_{n-1} with the source at k, sorted, distinct.
std::vector<Tableau> enumerate_tableaux(int n, int k);

bool is_standard(const Tableau& t);

}  // namespace kostant
