#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "qmom/exact.hpp"

namespace qmom {

/// Default refusal threshold for many-body space dimensions (dense solve
/// memory bound); override via the dim_cap arguments or QMOM_DIM_CAP.
inline constexpr std::size_t kDefaultDimensionCap = 20000;

/// Ordered many-body basis for one species.
/// Fermions: configs are ascending orbital-index lists, enumerated in
/// lexicographic order ({0,1} < {0,2} < ... < {N-2,N-1}).
/// Bosons: configs are occupation vectors (n_0..n_{N-1}) summing to m,
/// enumerated with the first orbital emptied last ((m,0,..) first), i.e.
/// descending lexicographic on occupations.
struct ManyBodyBasis {
    SpeciesStatistics stats = SpeciesStatistics::Fermion;
    int N = 0;
    int m = 0;
    std::vector<std::vector<int>> configs;

    std::size_t dimension() const { return configs.size(); }
    const std::vector<int>& config_at(std::size_t index) const { return configs.at(index); }
    std::size_t index_of(const std::vector<int>& config) const;

  private:
    friend ManyBodyBasis enumerate_basis(SpeciesStatistics, int, int, std::size_t);
    std::map<std::vector<int>, std::size_t> index_;
};

/// Enumerates the basis; throws ValidationError on bad (N, m) and
/// ResourceCapError (reporting the computed dimension) above dim_cap.
ManyBodyBasis enumerate_basis(SpeciesStatistics stats, int N, int m,
                              std::size_t dim_cap = kDefaultDimensionCap);

} // namespace qmom
