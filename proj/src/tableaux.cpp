#include "kostant/tableaux.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "kostant/correspondence.hpp"
#include "kostant/game.hpp"

namespace kostant {

int Partition::size() const
{
    return std::accumulate(parts.begin(), parts.end(), 0);
}

Partition Tableau::shape() const
{
    Partition p;
    for (const auto& r : rows)
        if (!r.empty()) p.parts.push_back(static_cast<int>(r.size()));
    return p;
}

int Tableau::size() const
{
    return shape().size();
}

std::string Tableau::ascii() const
{
    int width = 1;
    for (const auto& r : rows)
        for (int x : r) width = std::max(width, static_cast<int>(std::to_string(x).size()));
    std::ostringstream os;
    for (const auto& r : rows) {
        for (std::size_t c = 0; c < r.size(); ++c) {
            std::string s = std::to_string(r[c]);
            os << (c ? " " : "") << std::string(width - s.size(), ' ') << s;
        }
        os << '\n';
    }
    return os.str();
}

std::vector<int> permutation_of(const Word& word, int n)
{
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    for (int s : word) {
        if (s < 1 || s >= n) throw IndexOutOfRange("letter " + std::to_string(s) + " outside S_" + std::to_string(n));
        std::swap(p[s - 1], p[s]);
    }
    return p;
}

Partition grassmannian_shape(const Word& word, int k, int n)
{
    if (n < 2 || k < 1 || k >= n) throw IllegalRank("need n >= 2 and 1 <= k < n");
    std::vector<int> p = permutation_of(word, n);
    std::size_t inversions = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (p[i] > p[j]) ++inversions;
    if (inversions != word.size()) throw NotReduced(word_string(word) + " is not reduced");
    for (int i = 1; i < n; ++i)
        if (i != k && p[i - 1] > p[i])
            throw NotGrassmannian(word_string(word) + " has a descent at " + std::to_string(i));
    Partition lambda;
    for (int i = 1; i <= k; ++i) {
        int part = p[k - i] - (k - i + 1);
        if (part > 0) lambda.parts.push_back(part);
    }
    return lambda;
}

Tableau play_to_tableau(const std::vector<int>& moves, int k, int n)
{
    if (n < 2 || k < 1 || k >= n) throw IllegalRank("need n >= 2 and 1 <= k < n");
    GameBoard b = GameBoard::modified(build_diagram(Family::A, n - 1), {k});
    try {
        replay(b, b.initial(), moves);
    } catch (const InvalidMoveAt& e) {
        throw InvalidPlay(e.what());
    }
    const int rows = k, cols = n - k;
    std::vector<std::vector<int>> grid(rows, std::vector<int>(cols, 0));
    for (std::size_t j = 0; j < moves.size(); ++j) {
        int diag = moves[j] - k;
        bool placed = false;
        for (int r = 0; r < rows && !placed; ++r) {
            int c = r + diag;
            if (c < 0 || c >= cols || grid[r][c]) continue;
            if ((r == 0 || grid[r - 1][c]) && (c == 0 || grid[r][c - 1])) {
                grid[r][c] = static_cast<int>(j + 1);
                placed = true;
            }
        }
        if (!placed)
            throw PlacementImpossible("no free cell on diagonal " + std::to_string(diag) + " for move " +
                                      std::to_string(j + 1));
    }
    Tableau t;
    for (const auto& row : grid) {
        std::vector<int> filled;
        for (int x : row)
            if (x) filled.push_back(x);
        if (!filled.empty()) t.rows.push_back(std::move(filled));
    }
    if (!(t.shape() == grassmannian_shape(word_of_moves(moves), k, n)))
        throw PlacementImpossible("filled cells do not form the shape of the play's permutation");
    return t;
}

std::vector<Tableau> enumerate_tableaux(int n, int k)
{
    if (n < 2 || k < 1 || k >= n) throw IllegalRank("need n >= 2 and 1 <= k < n");
    std::vector<Tableau> out;
    for (const auto& pw : enumerate_plays(build_diagram(Family::A, n - 1), {k}, true))
        out.push_back(play_to_tableau(pw.moves, k, n));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_standard(const Tableau& t)
{
    std::vector<int> seen;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        if (t.rows[r].empty()) return false;
        if (r > 0 && t.rows[r].size() > t.rows[r - 1].size()) return false;
        for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
            int x = t.rows[r][c];
            if (c > 0 && x <= t.rows[r][c - 1]) return false;
            if (r > 0 && x <= t.rows[r - 1][c]) return false;
            seen.push_back(x);
        }
    }
    std::sort(seen.begin(), seen.end());
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (seen[i] != static_cast<int>(i + 1)) return false;
    return true;
}

}  // namespace kostant
