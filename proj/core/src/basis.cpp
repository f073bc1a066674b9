#include "qmom/basis.hpp"

#include <string>

namespace qmom {

std::size_t ManyBodyBasis::index_of(const std::vector<int>& config) const {
    auto it = index_.find(config);
    if (it == index_.end())
        throw ValidationError("basis: configuration not in this space");
    return it->second;
}

namespace {

void enumerate_fermion(int N, int m, std::vector<std::vector<int>>& out) {
    if (m == 0) {
        out.push_back({});
        return;
    }
    std::vector<int> cfg(m);
    for (int t = 0; t < m; ++t) cfg[t] = t;
    while (true) {
        out.push_back(cfg);
        int pos = m - 1;
        while (pos >= 0 && cfg[pos] == N - m + pos) --pos;
        if (pos < 0) break;
        ++cfg[pos];
        for (int t = pos + 1; t < m; ++t) cfg[t] = cfg[t - 1] + 1;
    }
}

void enumerate_boson(int N, int m, std::vector<int>& cfg, int slot, int remaining,
                     std::vector<std::vector<int>>& out) {
    if (slot == N - 1) {
        cfg[slot] = remaining;
        out.push_back(cfg);
        return;
    }
    for (int n = remaining; n >= 0; --n) {
        cfg[slot] = n;
        enumerate_boson(N, m, cfg, slot + 1, remaining - n, out);
    }
}

} // namespace

ManyBodyBasis enumerate_basis(SpeciesStatistics stats, int N, int m, std::size_t dim_cap) {
    BigInt dim = space_dimension(stats, N, m); // validates (N, m)
    if (dim > BigInt(dim_cap))
        throw ResourceCapError("basis: dimension " + dim.str() + " for (N=" +
                               std::to_string(N) + ", m=" + std::to_string(m) +
                               ") exceeds the cap " + std::to_string(dim_cap));
    ManyBodyBasis basis;
    basis.stats = stats;
    basis.N = N;
    basis.m = m;
    basis.configs.reserve(dim.convert_to<std::size_t>());
    if (stats == SpeciesStatistics::Fermion) {
        enumerate_fermion(N, m, basis.configs);
    } else {
        std::vector<int> cfg(N, 0);
        enumerate_boson(N, m, cfg, 0, m, basis.configs);
    }
    for (std::size_t idx = 0; idx < basis.configs.size(); ++idx)
        basis.index_.emplace(basis.configs[idx], idx);
    return basis;
}

} // namespace qmom
