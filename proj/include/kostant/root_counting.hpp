#pragma once

#include <vector>

#include "kostant/game.hpp"
#include "kostant/weyl.hpp"

namespace kostant {

// finals[j-1] = c_{j}, the terminal configuration of the game with the single source j.
// heights[j-1] = h_j = total chips of c_{j}; counting the source chip as well gives h_j + 1.
struct HeightProfile {
    std::vector<Configuration> finals;
    std::vector<Int> heights;
};

Configuration single_vertex_final(const DynkinDiagram& d, int j);
HeightProfile height_profile(const DynkinDiagram& d);

// Sum over j of c_{j}, read as a coefficient vector.
RootVector positive_root_sum(const DynkinDiagram& d);

// j -> I(w_{j}) with w_{j} the longest element of W^{S\{j}}; equals the positive roots whose
// support contains j, so these sets overlap as soon as two vertices are adjacent.
std::vector<std::vector<RootVector>> single_vertex_inversion_sets(const RootSystem& rs);

// Disjoint refinement: block j = I(w_{j}) minus the blocks of vertices before j, i.e. the
// positive roots whose lowest support vertex is j. Throws InternalInconsistency if the union
// of the inversion sets misses a positive root.
std::vector<std::vector<RootVector>> inversion_partition(const RootSystem& rs);

// c_S = sum_j c_{j}; throws NotSimplyLaced.
bool full_modification_identity(const DynkinDiagram& d);

}  // namespace kostant
