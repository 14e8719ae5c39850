#pragma once

#include <compare>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kostant/linalg.hpp"

namespace kostant {

// Graph stands for an arbitrary simple graph used as a game board (all edges single).
enum class Family { A, B, C, D, E, F, G, Graph };

std::string family_name(Family f);
Family parse_family(const std::string& s);

// Vertices are 1..rank. arrows(i, j) is the number of arrows from j to i.
class DynkinDiagram {
public:
    DynkinDiagram() = default;
    DynkinDiagram(Family family, int rank, std::vector<int> counts);  // row-major, counts[(i-1)*rank + j-1]

    // Simple graph on 1..n; edges are unordered pairs.
    static DynkinDiagram from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    Family family() const noexcept { return family_; }
    int rank() const noexcept { return rank_; }
    int arrows(int i, int j) const;
    bool adjacent(int i, int j) const { return i != j && arrows(i, j) > 0; }
    std::vector<int> neighbours(int v) const;
    bool simply_laced() const;
    bool connected() const;
    std::string name() const;

    bool operator==(const DynkinDiagram&) const = default;

private:
    Family family_ = Family::A;
    int rank_ = 0;
    std::vector<int> arrows_;
};

DynkinDiagram build_diagram(Family family, int rank);
DynkinDiagram build_diagram(const std::string& family, int rank);
DynkinDiagram dual(const DynkinDiagram& d);

// cartan_matrix(d)(i,j) = -arrows(i+1, j+1) off the diagonal, 2 on it (0-based storage).
// Row i pairs a root with the coroot of vertex i+1.
IntMatrix cartan_matrix(const DynkinDiagram& d);

// Sorted set of 1-based vertex labels; throws IndexOutOfRange.
std::vector<int> normalize_vertex_set(int rank, std::vector<int> vs);
std::vector<int> complement(int rank, const std::vector<int>& vs);

// Coefficients over the simple roots, 0-based storage.
struct RootVector {
    std::vector<Int> c;

    RootVector() = default;
    explicit RootVector(std::vector<Int> coeffs) : c(std::move(coeffs)) {}
    static RootVector simple(int rank, int i);
    static RootVector zero(int rank) { return RootVector(std::vector<Int>(rank, 0)); }

    int rank() const noexcept { return static_cast<int>(c.size()); }
    Int operator[](int i) const { return c[i]; }
    Int height() const;
    bool nonnegative() const;
    bool nonpositive() const;
    bool is_zero() const;
    std::string str() const;

    RootVector operator+(const RootVector& o) const;
    RootVector operator-(const RootVector& o) const;
    RootVector operator-() const;

    bool operator==(const RootVector&) const = default;
    // Height first, then lexicographic, so sorted containers list roots by height.
    std::strong_ordering operator<=>(const RootVector& o) const;
};

struct RootVectorHash {
    std::size_t operator()(const RootVector& r) const noexcept { return hash_ints(r.c); }
};

Int coroot_pairing(const IntMatrix& cartan, const RootVector& beta, int i);
RootVector simple_reflection(const IntMatrix& cartan, int i, const RootVector& beta);
IntMatrix reflection_matrix(const IntMatrix& cartan, int i);

// Closure of the simple roots under simple reflections, kept inside the nonnegative cone.
// Throws NotFiniteType when the closure exceeds max_roots.
std::vector<RootVector> positive_roots(const DynkinDiagram& d, std::size_t max_roots = 20000);

// Cached data for one diagram: Cartan matrix, reflections, positive roots.
class RootSystem {
public:
    explicit RootSystem(DynkinDiagram d);

    const DynkinDiagram& diagram() const noexcept { return d_; }
    const IntMatrix& cartan() const noexcept { return cartan_; }
    int rank() const noexcept { return d_.rank(); }
    const IntMatrix& reflection(int i) const { return refl_.at(i - 1); }
    const std::vector<RootVector>& positive_roots() const noexcept { return pos_; }
    std::size_t num_positive_roots() const noexcept { return pos_.size(); }
    bool is_positive_root(const RootVector& r) const;
    bool is_root(const RootVector& r) const;
    RootVector sum_of_positive_roots() const;
    Int sum_of_heights() const;

private:
    DynkinDiagram d_;
    IntMatrix cartan_;
    std::vector<IntMatrix> refl_;
    std::vector<RootVector> pos_;
    std::unordered_map<RootVector, std::size_t, RootVectorHash> index_;
};

}  // namespace kostant
