#pragma once

#include <cstdint>

namespace qmom {

/// Counter-based Gaussian source. Every matrix entry is generated from a key
/// mixed out of (master_seed, member, block, entry), so draws are reproducible
/// independent of evaluation order and thread schedule.

constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t mix_key(std::uint64_t master_seed, std::uint64_t member,
                                std::uint64_t block, std::uint64_t entry) {
    std::uint64_t h = splitmix64(master_seed);
    h = splitmix64(h ^ (0x9e3779b97f4a7c15ULL * (member + 1)));
    h = splitmix64(h ^ (0xc2b2ae3d27d4eb4fULL * (block + 1)));
    h = splitmix64(h ^ (0x165667b19e3779f9ULL * (entry + 1)));
    return h;
}

/// Uniform double in (0, 1), never exactly 0 or 1.
constexpr double to_unit_interval(std::uint64_t bits) {
    return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

struct GaussianPair {
    double z0;
    double z1;
};

/// Two independent standard normals (Box-Muller) for the given counter key.
GaussianPair counter_gaussians(std::uint64_t master_seed, std::uint64_t member,
                               std::uint64_t block, std::uint64_t entry);

} // namespace qmom
