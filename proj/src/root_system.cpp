#include "kostant/root_system.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_set>

namespace kostant {

std::string family_name(Family f)
{
    switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E: return "E";
    case Family::F: return "F";
    case Family::G: return "G";
    case Family::Graph: return "graph";
    }
    return "?";
}

Family parse_family(const std::string& s)
{
    if (s.size() == 1) {
        switch (s[0]) {
        case 'A': case 'a': return Family::A;
        case 'B': case 'b': return Family::B;
        case 'C': case 'c': return Family::C;
        case 'D': case 'd': return Family::D;
        case 'E': case 'e': return Family::E;
        case 'F': case 'f': return Family::F;
        case 'G': case 'g': return Family::G;
        default: break;
        }
    }
    if (s == "graph") return Family::Graph;
    throw InvalidDiagram("unknown family '" + s + "'");
}

DynkinDiagram::DynkinDiagram(Family family, int rank, std::vector<int> counts)
    : family_(family), rank_(rank), arrows_(std::move(counts))
{
    if (rank_ < 1) throw IllegalRank("rank must be at least 1");
    if (arrows_.size() != static_cast<std::size_t>(rank_) * rank_)
        throw InvalidDiagram("arrow matrix has wrong size");
    for (int i = 1; i <= rank_; ++i) {
        if (arrows(i, i) != 0) throw InvalidDiagram("self-loop at vertex " + std::to_string(i));
        for (int j = i + 1; j <= rank_; ++j) {
            int a = arrows(i, j), b = arrows(j, i);
            if (a < 0 || b < 0) throw InvalidDiagram("negative arrow count");
            if ((a == 0) != (b == 0))
                throw InvalidDiagram("edge " + std::to_string(i) + "-" + std::to_string(j) + " is one-sided");
            if (a * b > 3) throw InvalidDiagram("edge multiplicity above 3");
            if (family_ == Family::Graph && a * b > 1) throw InvalidDiagram("graph boards are simply laced");
        }
    }
}

DynkinDiagram DynkinDiagram::from_edges(int n, const std::vector<std::pair<int, int>>& edges)
{
    if (n < 1) throw IllegalRank("graph needs at least one vertex");
    std::vector<int> a(static_cast<std::size_t>(n) * n, 0);
    for (auto [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n) throw IndexOutOfRange("edge endpoint out of range");
        if (u == v) throw InvalidDiagram("self-loop at vertex " + std::to_string(u));
        a[(u - 1) * n + (v - 1)] = 1;
        a[(v - 1) * n + (u - 1)] = 1;
    }
    return DynkinDiagram(Family::Graph, n, std::move(a));
}

int DynkinDiagram::arrows(int i, int j) const
{
    if (i < 1 || i > rank_ || j < 1 || j > rank_) throw IndexOutOfRange("vertex out of range");
    return arrows_[(i - 1) * rank_ + (j - 1)];
}

std::vector<int> DynkinDiagram::neighbours(int v) const
{
    std::vector<int> out;
    for (int u = 1; u <= rank_; ++u)
        if (adjacent(v, u)) out.push_back(u);
    return out;
}

bool DynkinDiagram::simply_laced() const
{
    return std::all_of(arrows_.begin(), arrows_.end(), [](int x) { return x <= 1; });
}

bool DynkinDiagram::connected() const
{
    std::vector<bool> seen(rank_ + 1, false);
    std::deque<int> q{1};
    seen[1] = true;
    int count = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int u : neighbours(v))
            if (!seen[u]) {
                seen[u] = true;
                ++count;
                q.push_back(u);
            }
    }
    return count == rank_;
}

std::string DynkinDiagram::name() const
{
    if (family_ == Family::Graph) return "graph" + std::to_string(rank_);
    return family_name(family_) + std::to_string(rank_);
}

DynkinDiagram build_diagram(Family family, int n)
{
    std::vector<int> a(static_cast<std::size_t>(std::max(n, 0)) * std::max(n, 0), 0);
    auto set = [&](int i, int j, int ij, int ji) {
        a[(i - 1) * n + (j - 1)] = ij;
        a[(j - 1) * n + (i - 1)] = ji;
    };
    auto path = [&](int from, int to) {
        for (int i = from; i < to; ++i) set(i, i + 1, 1, 1);
    };
    auto need = [&](bool ok, const char* what) {
        if (!ok) throw IllegalRank(family_name(family) + std::to_string(n) + ": " + what);
    };
    switch (family) {
    case Family::A:
        need(n >= 1, "rank must be >= 1");
        path(1, n);
        break;
    case Family::B:
        need(n >= 2, "rank must be >= 2");
        set(1, 2, 2, 1);  // vertex 1 short
        path(2, n);
        break;
    case Family::C:
        need(n >= 2, "rank must be >= 2");
        set(1, 2, 1, 2);  // vertex 1 long
        path(2, n);
        break;
    case Family::D:
        need(n >= 4, "rank must be >= 4");
        path(1, n - 1);
        set(n - 2, n, 1, 1);
        break;
    case Family::E:
        need(n >= 6 && n <= 8, "rank must be 6, 7 or 8");
        path(1, n - 1);
        set(3, n, 1, 1);
        break;
    case Family::F:
        need(n == 4, "rank must be 4");
        set(1, 2, 1, 1);
        set(2, 3, 1, 2);  // vertex 3 short
        set(3, 4, 1, 1);
        break;
    case Family::G:
        need(n == 2, "rank must be 2");
        set(1, 2, 3, 1);  // vertex 1 short
        break;
    case Family::Graph:
        throw InvalidDiagram("graph boards are built from edge lists");
    }
    return DynkinDiagram(family, n, std::move(a));
}

DynkinDiagram build_diagram(const std::string& family, int rank)
{
    return build_diagram(parse_family(family), rank);
}

DynkinDiagram dual(const DynkinDiagram& d)
{
    int n = d.rank();
    std::vector<int> a(static_cast<std::size_t>(n) * n, 0);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) a[(i - 1) * n + (j - 1)] = d.arrows(j, i);
    Family f = d.family();
    if (f == Family::B) f = Family::C;
    else if (f == Family::C) f = Family::B;
    return DynkinDiagram(f, n, std::move(a));
}

IntMatrix cartan_matrix(const DynkinDiagram& d)
{
    int n = d.rank();
    IntMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = (i == j) ? 2 : -d.arrows(i + 1, j + 1);
    return m;
}

std::vector<int> normalize_vertex_set(int rank, std::vector<int> vs)
{
    for (int v : vs)
        if (v < 1 || v > rank) throw IndexOutOfRange("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(rank));
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

std::vector<int> complement(int rank, const std::vector<int>& vs)
{
    std::vector<int> out;
    for (int v = 1; v <= rank; ++v)
        if (std::find(vs.begin(), vs.end(), v) == vs.end()) out.push_back(v);
    return out;
}

RootVector RootVector::simple(int rank, int i)
{
    if (i < 1 || i > rank) throw IndexOutOfRange("simple root index out of range");
    RootVector r = zero(rank);
    r.c[i - 1] = 1;
    return r;
}

Int RootVector::height() const
{
    Int h = 0;
    for (Int x : c) h = checked_add(h, x);
    return h;
}

bool RootVector::nonnegative() const
{
    return std::all_of(c.begin(), c.end(), [](Int x) { return x >= 0; });
}

bool RootVector::nonpositive() const
{
    return std::all_of(c.begin(), c.end(), [](Int x) { return x <= 0; });
}

bool RootVector::is_zero() const
{
    return std::all_of(c.begin(), c.end(), [](Int x) { return x == 0; });
}

std::string RootVector::str() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ')';
    return os.str();
}

RootVector RootVector::operator+(const RootVector& o) const
{
    RootVector r(c);
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] = checked_add(r.c[i], o.c[i]);
    return r;
}

RootVector RootVector::operator-(const RootVector& o) const
{
    RootVector r(c);
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] = checked_sub(r.c[i], o.c[i]);
    return r;
}

RootVector RootVector::operator-() const
{
    return zero(rank()) - *this;
}

std::strong_ordering RootVector::operator<=>(const RootVector& o) const
{
    if (auto cmp = height() <=> o.height(); cmp != 0) return cmp;
    return c <=> o.c;
}

Int coroot_pairing(const IntMatrix& cartan, const RootVector& beta, int i)
{
    if (i < 1 || i > cartan.size()) throw IndexOutOfRange("coroot index out of range");
    Int s = 0;
    for (int j = 0; j < cartan.size(); ++j) s = checked_add(s, checked_mul(beta.c[j], cartan(i - 1, j)));
    return s;
}

RootVector simple_reflection(const IntMatrix& cartan, int i, const RootVector& beta)
{
    RootVector r = beta;
    r.c[i - 1] = checked_sub(r.c[i - 1], coroot_pairing(cartan, beta, i));
    return r;
}

IntMatrix reflection_matrix(const IntMatrix& cartan, int i)
{
    if (i < 1 || i > cartan.size()) throw IndexOutOfRange("reflection index out of range");
    IntMatrix m = IntMatrix::identity(cartan.size());
    for (int j = 0; j < cartan.size(); ++j) m(i - 1, j) -= cartan(i - 1, j);
    return m;
}

std::vector<RootVector> positive_roots(const DynkinDiagram& d, std::size_t max_roots)
{
    IntMatrix a = cartan_matrix(d);
    int n = d.rank();
    std::unordered_set<RootVector, RootVectorHash> seen;
    std::deque<RootVector> q;
    for (int i = 1; i <= n; ++i) {
        q.push_back(RootVector::simple(n, i));
        seen.insert(q.back());
    }
    while (!q.empty()) {
        RootVector r = q.front();
        q.pop_front();
        for (int i = 1; i <= n; ++i) {
            RootVector s = simple_reflection(a, i, r);
            if (!s.nonnegative() || s.is_zero() || seen.count(s)) continue;
            if (seen.size() >= max_roots)
                throw NotFiniteType(d.name() + " has more than " + std::to_string(max_roots) + " positive roots");
            seen.insert(s);
            q.push_back(std::move(s));
        }
    }
    std::vector<RootVector> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

RootSystem::RootSystem(DynkinDiagram d) : d_(std::move(d)), cartan_(cartan_matrix(d_))
{
    for (int i = 1; i <= d_.rank(); ++i) refl_.push_back(reflection_matrix(cartan_, i));
    pos_ = kostant::positive_roots(d_);
    for (std::size_t k = 0; k < pos_.size(); ++k) index_.emplace(pos_[k], k);
}

bool RootSystem::is_positive_root(const RootVector& r) const
{
    return index_.count(r) > 0;
}

bool RootSystem::is_root(const RootVector& r) const
{
    return is_positive_root(r) || is_positive_root(-r);
}

RootVector RootSystem::sum_of_positive_roots() const
{
    RootVector s = RootVector::zero(rank());
    for (const auto& r : pos_) s = s + r;
    return s;
}

Int RootSystem::sum_of_heights() const
{
    return sum_of_positive_roots().height();
}

}  // namespace kostant
