#pragma once

#include <vector>

#include "qmom/exact.hpp"

namespace qmom {

/// Repository default parameter sets for figure-style k sweeps. The fermion
/// entries use sp-state counts at heavy-nuclei scale (N/m >= 25), where the
/// sixth moment tracks the q-normal reference to better than 1%; the boson
/// entries are small-N condensate/interacting-boson-model style spaces.
struct DeskGridEntry {
    int N1, m1, N2, m2;
};

const std::vector<DeskGridEntry>& default_fermion_grids();
const std::vector<DeskGridEntry>& default_small_m1_grids();
const std::vector<DeskGridEntry>& default_boson_grids();

} // namespace qmom
