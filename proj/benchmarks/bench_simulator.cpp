#include <benchmark/benchmark.h>

#include <Eigen/Eigenvalues>

#include "qmom/simulator.hpp"

namespace {

using namespace qmom;

EnsembleConfig desk_config(int k) {
    EnsembleConfig cfg;
    cfg.system = {SpeciesStatistics::Fermion, 6, 3, 6, 3};
    cfg.interaction.k = k;
    cfg.members = 2;
    cfg.master_seed = 1;
    return cfg;
}

void BM_SampleMember(benchmark::State& state) {
    EnsembleSimulator sim(desk_config(static_cast<int>(state.range(0))));
    std::int64_t member = 0;
    for (auto _ : state) {
        Eigen::MatrixXcd h = sim.sample_member(member++);
        benchmark::DoNotOptimize(h.data());
    }
}
BENCHMARK(BM_SampleMember)->Arg(1)->Arg(2)->Arg(3);

void BM_MemberEigenvalues(benchmark::State& state) {
    EnsembleSimulator sim(desk_config(2));
    Eigen::MatrixXcd h = sim.sample_member(0);
    for (auto _ : state) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
        benchmark::DoNotOptimize(solver.eigenvalues().data());
    }
}
BENCHMARK(BM_MemberEigenvalues);

} // namespace

BENCHMARK_MAIN();
