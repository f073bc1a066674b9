#include <benchmark/benchmark.h>

#include "qmom/qnormal.hpp"

namespace {

using namespace qmom;

void BM_PdfEval(benchmark::State& state) {
    const double q = state.range(0) / 100.0;
    QNormalDensity density(q);
    double x = -1.9;
    for (auto _ : state) {
        benchmark::DoNotOptimize(density(x));
        x = x < 1.9 ? x + 0.013 : -1.9;
    }
}
BENCHMARK(BM_PdfEval)->Arg(0)->Arg(50)->Arg(90);

void BM_Normalization(benchmark::State& state) {
    const double q = state.range(0) / 100.0;
    QNormalDensity density(q);
    for (auto _ : state) {
        double norm = density.integrate([](double) { return 1.0; }, 1e-9);
        benchmark::DoNotOptimize(norm);
    }
}
BENCHMARK(BM_Normalization)->Arg(0)->Arg(50)->Arg(90);

} // namespace
