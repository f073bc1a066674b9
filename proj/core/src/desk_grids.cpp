#include "qmom/desk_grids.hpp"

namespace qmom {

const std::vector<DeskGridEntry>& default_fermion_grids() {
    static const std::vector<DeskGridEntry> grids = {
        {120, 4, 120, 4},
        {240, 6, 240, 6},
        {100, 4, 140, 6},
        {1200, 20, 1200, 20},
    };
    return grids;
}

const std::vector<DeskGridEntry>& default_small_m1_grids() {
    static const std::vector<DeskGridEntry> grids = {
        {240, 2, 240, 6},
        {240, 3, 240, 6},
        {240, 4, 240, 6},
    };
    return grids;
}

const std::vector<DeskGridEntry>& default_boson_grids() {
    static const std::vector<DeskGridEntry> grids = {
        {4, 4, 4, 4},
        {4, 6, 4, 6},
        {5, 4, 5, 4},
    };
    return grids;
}

} // namespace qmom
