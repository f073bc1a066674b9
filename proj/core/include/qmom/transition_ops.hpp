#pragma once

#include <cstdint>
#include <vector>

#include "qmom/basis.hpp"

namespace qmom {

/// The set of normalized rank-t transition operators A+_alpha(t) A_beta(t)
/// over an m-particle basis, one sparse matrix per ordered (alpha, beta) pair
/// of t-particle configurations.
///
/// Fermions: A+_alpha is the ascending-ordered product of creation operators,
/// so entries are +-1 phases from counting inversions while extracting beta
/// from / inserting alpha into an ordered configuration.
/// Bosons: A+_a(t) maps the vacuum to the unit-norm state |t,a>, giving
/// matrix elements sqrt(prod_i C(gamma_i, b_i)) * sqrt(prod_i C(rem_i+a_i, a_i)).
struct TransitionOperatorSet {
    SpeciesStatistics stats = SpeciesStatistics::Fermion;
    int N = 0;
    int m = 0;
    int t = 0;

    std::vector<std::vector<int>> t_configs;

    struct Entry {
        std::uint32_t row; // m-basis index of the target configuration
        std::uint32_t col; // m-basis index of the source configuration
        double value;
    };
    /// Indexed alpha * rank_dimension() + beta; at most one entry per column.
    std::vector<std::vector<Entry>> ops;

    std::size_t rank_dimension() const { return t_configs.size(); }
    const std::vector<Entry>& op(std::size_t alpha, std::size_t beta) const {
        return ops.at(alpha * t_configs.size() + beta);
    }
};

/// Builds the operator set for 0 <= t <= m (ValidationError otherwise).
TransitionOperatorSet transition_operators(const ManyBodyBasis& basis, int t);

} // namespace qmom
