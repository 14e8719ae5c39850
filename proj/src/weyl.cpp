#include "kostant/weyl.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_set>

namespace kostant {

namespace {

void check_letter(const RootSystem& rs, int letter)
{
    if (letter < 1 || letter > rs.rank())
        throw IndexOutOfRange("letter " + std::to_string(letter) + " out of range 1.." + std::to_string(rs.rank()));
}

// w(alpha_i) > 0, read off column i of the matrix.
bool keeps_positive(const WeylElement& w, int i)
{
    for (int r = 0; r < w.m.size(); ++r)
        if (w.m(r, i - 1) < 0) return false;
    return true;
}

WeylElement times_simple(const RootSystem& rs, const WeylElement& w, int i)
{
    return WeylElement{w.m * rs.reflection(i)};
}

}  // namespace

std::string word_string(const Word& w)
{
    if (w.empty()) return "e";
    std::ostringstream os;
    for (int x : w) os << 's' << x;
    return os.str();
}

WeylElement identity_element(const RootSystem& rs)
{
    return WeylElement{IntMatrix::identity(rs.rank())};
}

WeylElement element_of(const RootSystem& rs, const Word& word)
{
    WeylElement w = identity_element(rs);
    for (int x : word) {
        check_letter(rs, x);
        w = times_simple(rs, w, x);
    }
    return w;
}

WeylElement inverse(const RootSystem& rs, const WeylElement& w)
{
    Word r = reduced_word(rs, w);
    std::reverse(r.begin(), r.end());
    return element_of(rs, r);
}

std::vector<RootVector> inversion_set(const RootSystem& rs, const WeylElement& w)
{
    std::vector<RootVector> out;
    for (const auto& a : rs.positive_roots())
        if (w(a).nonpositive()) out.push_back(a);
    return out;
}

std::size_t length(const RootSystem& rs, const WeylElement& w)
{
    std::size_t n = 0;
    for (const auto& a : rs.positive_roots())
        if (w(a).nonpositive()) ++n;
    return n;
}

bool is_reduced(const RootSystem& rs, const Word& word)
{
    WeylElement w = identity_element(rs);
    for (int x : word) {
        check_letter(rs, x);
        if (!keeps_positive(w, x)) return false;
        w = times_simple(rs, w, x);
    }
    return true;
}

Word reduced_word(const RootSystem& rs, const WeylElement& w)
{
    Word peeled;
    WeylElement u = w;
    const WeylElement e = identity_element(rs);
    while (!(u == e)) {
        int i = 1;
        while (i <= rs.rank() && keeps_positive(u, i)) ++i;
        if (i > rs.rank()) throw InternalInconsistency("non-identity element without a right descent");
        u = times_simple(rs, u, i);
        peeled.push_back(i);
    }
    std::reverse(peeled.begin(), peeled.end());
    return peeled;
}

bool is_min_rep(const RootSystem& rs, const WeylElement& w, const std::vector<int>& J)
{
    std::size_t lw = length(rs, w);
    bool by_length = true;
    for (int j : J) {
        check_letter(rs, j);
        if (length(rs, times_simple(rs, w, j)) <= lw) by_length = false;
    }
    bool by_inversions = true;
    for (const auto& a : inversion_set(rs, w)) {
        bool in_phi_j = true;
        for (int k = 0; k < rs.rank(); ++k)
            if (a.c[k] != 0 && std::find(J.begin(), J.end(), k + 1) == J.end()) in_phi_j = false;
        if (in_phi_j) by_inversions = false;
    }
    if (by_length != by_inversions)
        throw InternalInconsistency("W^J characterizations disagree for " + word_string(reduced_word(rs, w)));
    return by_length;
}

std::vector<WeylElement> minimal_coset_reps(const RootSystem& rs, const std::vector<int>& J, std::size_t max_elements)
{
    std::vector<int> Jn = normalize_vertex_set(rs.rank(), J);
    std::vector<WeylElement> out{identity_element(rs)};
    std::unordered_set<WeylElement, WeylElementHash> seen{out.front()};
    for (std::size_t k = 0; k < out.size(); ++k) {
        for (int i = 1; i <= rs.rank(); ++i) {
            WeylElement u{rs.reflection(i) * out[k].m};
            if (seen.count(u)) continue;
            if (length(rs, u) <= length(rs, out[k]) || !is_min_rep(rs, u, Jn)) continue;
            if (out.size() >= max_elements) throw LimitExceeded("W^J exceeds " + std::to_string(max_elements) + " elements");
            seen.insert(u);
            out.push_back(std::move(u));
        }
    }
    return out;
}

std::pair<WeylElement, WeylElement> parabolic_decompose(const RootSystem& rs, const WeylElement& w,
                                                        const std::vector<int>& J)
{
    std::vector<int> Jn = normalize_vertex_set(rs.rank(), J);
    WeylElement u = w;
    for (bool moved = true; moved;) {
        moved = false;
        for (int j : Jn)
            if (!keeps_positive(u, j)) {
                u = times_simple(rs, u, j);
                moved = true;
                break;
            }
    }
    WeylElement v = inverse(rs, u) * w;
    if (!(u * v == w) || length(rs, u) + length(rs, v) != length(rs, w) || !is_min_rep(rs, u, Jn))
        throw InternalInconsistency("parabolic decomposition failed");
    for (int x : reduced_word(rs, v))
        if (std::find(Jn.begin(), Jn.end(), x) == Jn.end())
            throw InternalInconsistency("parabolic factor leaves W_J");
    return {u, v};
}

WeylElement longest_element(const RootSystem& rs, const std::vector<int>& J)
{
    std::vector<int> Jn = normalize_vertex_set(rs.rank(), J);
    WeylElement w = identity_element(rs);
    for (bool moved = true; moved;) {
        moved = false;
        for (int j : Jn)
            if (keeps_positive(w, j)) {
                w = times_simple(rs, w, j);
                moved = true;
                break;
            }
    }
    return w;
}

WeylElement longest_min_rep(const RootSystem& rs, const std::vector<int>& J)
{
    std::vector<int> all(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) all[i] = i + 1;
    return longest_element(rs, all) * longest_element(rs, J);
}

WeylGroup::WeylGroup(const RootSystem& rs, std::size_t max_elements) : rank_(rs.rank())
{
    elems_.push_back(identity_element(rs));
    words_.emplace_back();
    index_.emplace(elems_.front(), 0);
    for (std::size_t k = 0; k < elems_.size(); ++k) {
        for (int i = 1; i <= rank_; ++i) {
            WeylElement u = times_simple(rs, elems_[k], i);
            auto it = index_.find(u);
            std::size_t target;
            if (it != index_.end()) {
                target = it->second;
            } else {
                if (elems_.size() >= max_elements)
                    throw LimitExceeded("Weyl group exceeds " + std::to_string(max_elements) + " elements");
                target = elems_.size();
                Word w = words_[k];
                w.push_back(i);
                index_.emplace(u, target);
                elems_.push_back(std::move(u));
                words_.push_back(std::move(w));
            }
            right_.push_back(target);
        }
    }
}

std::size_t WeylGroup::index_of(const WeylElement& w) const
{
    auto it = index_.find(w);
    if (it == index_.end()) throw IndexOutOfRange("element not in the group");
    return it->second;
}

}  // namespace kostant
