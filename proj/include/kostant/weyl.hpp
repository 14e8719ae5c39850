#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kostant/root_system.hpp"

namespace kostant {

// Letters as written: {a, b, c} is s_a s_b s_c, so s_c acts first.
using Word = std::vector<int>;

std::string word_string(const Word& w);  // "s1s2s1", "e" for the empty word

// An element of W, stored as its matrix on simple-root coordinates (w(beta) = M * beta).
struct WeylElement {
    IntMatrix m;

    RootVector operator()(const RootVector& beta) const { return RootVector(m.apply(beta.c)); }
    WeylElement operator*(const WeylElement& o) const { return WeylElement{m * o.m}; }
    bool operator==(const WeylElement&) const = default;
};

struct WeylElementHash {
    std::size_t operator()(const WeylElement& w) const noexcept { return hash_ints(w.m.data()); }
};

WeylElement identity_element(const RootSystem& rs);
WeylElement element_of(const RootSystem& rs, const Word& word);
WeylElement inverse(const RootSystem& rs, const WeylElement& w);

// {alpha > 0 : w(alpha) < 0}, sorted by height.
std::vector<RootVector> inversion_set(const RootSystem& rs, const WeylElement& w);
std::size_t length(const RootSystem& rs, const WeylElement& w);

bool is_reduced(const RootSystem& rs, const Word& word);

// Reduced word for w, built by peeling right descents (lexicographically smallest at each step).
Word reduced_word(const RootSystem& rs, const WeylElement& w);

// Membership in W^J = {w : l(w s_j) > l(w) for j in J}. Evaluates the length test and the
// inversion test (I(w) misses Phi_J^+) and throws InternalInconsistency if they disagree.
bool is_min_rep(const RootSystem& rs, const WeylElement& w, const std::vector<int>& J);

// Every element of W^J; BFS on left multiplication. |W^J| = |W| / |W_J|.
std::vector<WeylElement> minimal_coset_reps(const RootSystem& rs, const std::vector<int>& J,
                                            std::size_t max_elements = 1'000'000);

// (w^J, w_J) with w = w^J w_J.
std::pair<WeylElement, WeylElement> parabolic_decompose(const RootSystem& rs, const WeylElement& w,
                                                        const std::vector<int>& J);

// Longest element of W_J (J = all vertices gives w_0).
WeylElement longest_element(const RootSystem& rs, const std::vector<int>& J);

// Longest element of W^J, equal to w_0 * w_{0,J}.
WeylElement longest_min_rep(const RootSystem& rs, const std::vector<int>& J);

// Whole group, BFS by right multiplication from the identity. Element 0 is the identity.
class WeylGroup {
public:
    explicit WeylGroup(const RootSystem& rs, std::size_t max_elements = 2'000'000);

    std::size_t size() const noexcept { return elems_.size(); }
    const WeylElement& element(std::size_t k) const { return elems_[k]; }
    const Word& word(std::size_t k) const { return words_[k]; }  // shortlex-least reduced word
    std::size_t length(std::size_t k) const { return words_[k].size(); }
    std::size_t right_multiply(std::size_t k, int i) const { return right_[k * rank_ + (i - 1)]; }
    std::size_t index_of(const WeylElement& w) const;

private:
    int rank_;
    std::vector<WeylElement> elems_;
    std::vector<Word> words_;
    std::vector<std::size_t> right_;
    std::unordered_map<WeylElement, std::size_t, WeylElementHash> index_;
};

}  // namespace kostant
