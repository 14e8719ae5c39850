#include "kostant/root_counting.hpp"

#include <algorithm>
#include <set>

namespace kostant {

namespace {

Configuration terminal(const DynkinDiagram& d, std::vector<int> I)
{
    GameBoard b = GameBoard::modified(d, std::move(I));
    RunResult r = run(b, b.initial());
    if (!r.terminated()) throw NonTerminating("modified game on " + d.name() + " does not terminate");
    return r.trace.final();
}

}  // namespace

Configuration single_vertex_final(const DynkinDiagram& d, int j)
{
    if (j < 1 || j > d.rank()) throw IndexOutOfRange("vertex out of range");
    return terminal(d, {j});
}

HeightProfile height_profile(const DynkinDiagram& d)
{
    HeightProfile p;
    for (int j = 1; j <= d.rank(); ++j) {
        p.finals.push_back(single_vertex_final(d, j));
        p.heights.push_back(p.finals.back().total());
    }
    return p;
}

RootVector positive_root_sum(const DynkinDiagram& d)
{
    RootVector s = RootVector::zero(d.rank());
    for (int j = 1; j <= d.rank(); ++j) s = s + RootVector(single_vertex_final(d, j).chips);
    return s;
}

std::vector<std::vector<RootVector>> single_vertex_inversion_sets(const RootSystem& rs)
{
    std::vector<std::vector<RootVector>> out;
    for (int j = 1; j <= rs.rank(); ++j) {
        std::vector<int> J;
        for (int i = 1; i <= rs.rank(); ++i)
            if (i != j) J.push_back(i);
        out.push_back(inversion_set(rs, longest_min_rep(rs, J)));
    }
    return out;
}

std::vector<std::vector<RootVector>> inversion_partition(const RootSystem& rs)
{
    std::vector<std::vector<RootVector>> out;
    std::set<RootVector> taken;
    for (auto& inv : single_vertex_inversion_sets(rs)) {
        std::vector<RootVector> block;
        for (auto& a : inv)
            if (taken.insert(a).second) block.push_back(a);
        out.push_back(std::move(block));
    }
    if (taken.size() != rs.num_positive_roots())
        throw InternalInconsistency("single-vertex inversion sets do not cover the positive roots");
    return out;
}

bool full_modification_identity(const DynkinDiagram& d)
{
    if (!d.simply_laced()) throw NotSimplyLaced(d.name() + " is not simply laced");
    std::vector<int> all(d.rank());
    for (int i = 0; i < d.rank(); ++i) all[i] = i + 1;
    return RootVector(terminal(d, all).chips) == positive_root_sum(d);
}

}  // namespace kostant
