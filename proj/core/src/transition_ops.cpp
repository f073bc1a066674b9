#include "qmom/transition_ops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace qmom {

namespace {

// Enumerate t-subsets of `pool` (ascending), calling fn(subset).
template <typename Fn>
void for_each_subset(const std::vector<int>& pool, int t, Fn&& fn) {
    const int n = static_cast<int>(pool.size());
    if (t > n) return;
    std::vector<int> pick(t);
    std::vector<int> pos(t);
    for (int i = 0; i < t; ++i) pos[i] = i;
    while (true) {
        for (int i = 0; i < t; ++i) pick[i] = pool[pos[i]];
        fn(pick, pos);
        if (t == 0) return;
        int i = t - 1;
        while (i >= 0 && pos[i] == n - t + i) --i;
        if (i < 0) return;
        ++pos[i];
        for (int j = i + 1; j < t; ++j) pos[j] = pos[j - 1] + 1;
    }
}

void build_fermion(const ManyBodyBasis& basis, TransitionOperatorSet& set) {
    const int t = set.t;
    const std::size_t rank_dim = set.t_configs.size();
    std::map<std::vector<int>, std::size_t> t_index;
    for (std::size_t i = 0; i < rank_dim; ++i) t_index.emplace(set.t_configs[i], i);

    std::vector<int> all(basis.N);
    for (int i = 0; i < basis.N; ++i) all[i] = i;

    for (std::size_t col = 0; col < basis.dimension(); ++col) {
        const auto& gamma = basis.config_at(col);
        for_each_subset(gamma, t, [&](const std::vector<int>& beta,
                                      const std::vector<int>& beta_pos) {
            // extracting beta smallest-first: sign exponent sum(pos) - t(t-1)/2
            long removal = -t * (t - 1) / 2;
            for (int p : beta_pos) removal += p;
            std::vector<int> rem;
            rem.reserve(gamma.size() - t);
            std::size_t bi = 0;
            for (std::size_t i = 0; i < gamma.size(); ++i) {
                if (bi < beta_pos.size() && static_cast<int>(i) == beta_pos[bi]) {
                    ++bi;
                    continue;
                }
                rem.push_back(gamma[i]);
            }
            std::vector<int> rem_complement;
            rem_complement.reserve(basis.N - rem.size());
            std::size_t ri = 0;
            for (int orb : all) {
                if (ri < rem.size() && rem[ri] == orb) {
                    ++ri;
                    continue;
                }
                rem_complement.push_back(orb);
            }
            const std::size_t beta_idx = t_index.at(beta);
            for_each_subset(rem_complement, t, [&](const std::vector<int>& alpha,
                                                   const std::vector<int>&) {
                std::vector<int> target(rem);
                target.insert(target.end(), alpha.begin(), alpha.end());
                std::sort(target.begin(), target.end());
                // insertion phase: positions of alpha in the merged config
                long insertion = -t * (t - 1) / 2;
                std::size_t ai = 0;
                for (std::size_t i = 0; i < target.size() && ai < alpha.size(); ++i)
                    if (target[i] == alpha[ai]) {
                        insertion += static_cast<long>(i);
                        ++ai;
                    }
                const double value = ((removal + insertion) % 2 == 0) ? 1.0 : -1.0;
                const std::size_t alpha_idx = t_index.at(alpha);
                set.ops[alpha_idx * rank_dim + beta_idx].push_back(
                    {static_cast<std::uint32_t>(basis.index_of(target)),
                     static_cast<std::uint32_t>(col), value});
            });
        });
    }
}

// Enumerate occupation vectors b <= limit with sum t.
template <typename Fn>
void for_each_occupation_below(const std::vector<int>& limit, int t, Fn&& fn) {
    std::vector<int> b(limit.size(), 0);
    auto rec = [&](auto&& self, std::size_t slot, int remaining) -> void {
        if (slot == limit.size() - 1) {
            if (remaining <= limit[slot]) {
                b[slot] = remaining;
                fn(b);
            }
            return;
        }
        int hi = std::min(remaining, limit[slot]);
        for (int n = hi; n >= 0; --n) {
            b[slot] = n;
            self(self, slot + 1, remaining - n);
        }
    };
    if (!limit.empty()) rec(rec, 0, t);
}

void build_boson(const ManyBodyBasis& basis, TransitionOperatorSet& set) {
    const int t = set.t;
    const std::size_t rank_dim = set.t_configs.size();
    std::map<std::vector<int>, std::size_t> t_index;
    for (std::size_t i = 0; i < rank_dim; ++i) t_index.emplace(set.t_configs[i], i);

    for (std::size_t col = 0; col < basis.dimension(); ++col) {
        const auto& gamma = basis.config_at(col);
        for_each_occupation_below(gamma, t, [&](const std::vector<int>& b) {
            BigInt w1 = 1;
            std::vector<int> rem(gamma.size());
            for (std::size_t i = 0; i < gamma.size(); ++i) {
                w1 *= binomial(gamma[i], b[i]);
                rem[i] = gamma[i] - b[i];
            }
            const std::size_t beta_idx = t_index.at(b);
            for (std::size_t alpha_idx = 0; alpha_idx < rank_dim; ++alpha_idx) {
                const auto& a = set.t_configs[alpha_idx];
                BigInt w2 = 1;
                std::vector<int> target(rem);
                for (std::size_t i = 0; i < rem.size(); ++i) {
                    target[i] += a[i];
                    w2 *= binomial(target[i], a[i]);
                }
                set.ops[alpha_idx * rank_dim + beta_idx].push_back(
                    {static_cast<std::uint32_t>(basis.index_of(target)),
                     static_cast<std::uint32_t>(col),
                     std::sqrt(to_double(w1) * to_double(w2))});
            }
        });
    }
}

} // namespace

TransitionOperatorSet transition_operators(const ManyBodyBasis& basis, int t) {
    if (t < 0 || t > basis.m)
        throw ValidationError("transition_operators: need 0 <= t <= m, got t=" +
                              std::to_string(t));
    TransitionOperatorSet set;
    set.stats = basis.stats;
    set.N = basis.N;
    set.m = basis.m;
    set.t = t;
    set.t_configs = enumerate_basis(basis.stats, basis.N, t,
                                    std::numeric_limits<std::size_t>::max())
                        .configs;
    set.ops.resize(set.t_configs.size() * set.t_configs.size());
    if (basis.stats == SpeciesStatistics::Fermion)
        build_fermion(basis, set);
    else
        build_boson(basis, set);
    return set;
}

} // namespace qmom
