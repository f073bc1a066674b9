#include <benchmark/benchmark.h>

#include "qmom/moments_asymptotic.hpp"
#include "qmom/moments_finite.hpp"

namespace {

using namespace qmom;

InteractionSpec uniform(int k) {
    InteractionSpec inter;
    inter.k = k;
    return inter;
}

void BM_QFiniteDesk(benchmark::State& state) {
    SystemSpec sys{SpeciesStatistics::Fermion, 12, 6, 12, 6};
    InteractionSpec inter = uniform(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        double q = q_finite(sys, inter);
        benchmark::DoNotOptimize(q);
    }
}
BENCHMARK(BM_QFiniteDesk)->Arg(1)->Arg(3)->Arg(6);

void BM_Mu6HeavyNuclei(benchmark::State& state) {
    SystemSpec sys{SpeciesStatistics::Fermion, 240, 6, 240, 6};
    InteractionSpec inter = uniform(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        double mu6 = mu6_finite(sys, inter, YTermPolicy::AsymptoticU);
        benchmark::DoNotOptimize(mu6);
    }
}
BENCHMARK(BM_Mu6HeavyNuclei)->Arg(2)->Arg(6);

void BM_Mu6Asymptotic(benchmark::State& state) {
    SystemSpec sys{SpeciesStatistics::Fermion, 240, 6, 240, 6};
    InteractionSpec inter = uniform(3);
    for (auto _ : state) {
        double mu6 = mu6_asym(sys, inter);
        benchmark::DoNotOptimize(mu6);
    }
}
BENCHMARK(BM_Mu6Asymptotic);

} // namespace
