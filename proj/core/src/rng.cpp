#include "qmom/rng.hpp"

#include <cmath>
#include <numbers>

namespace qmom {

GaussianPair counter_gaussians(std::uint64_t master_seed, std::uint64_t member,
                               std::uint64_t block, std::uint64_t entry) {
    const std::uint64_t key = mix_key(master_seed, member, block, entry);
    const double u1 = to_unit_interval(splitmix64(key));
    const double u2 = to_unit_interval(splitmix64(key ^ 0xd6e8feb86659fd93ULL));
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

} // namespace qmom
