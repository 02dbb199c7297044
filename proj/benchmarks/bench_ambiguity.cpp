// SPDX-License-Identifier: Apache-2.0

#include "cellfree/ambiguity.hpp"
#include "cellfree/special_functions.hpp"

#include <benchmark/benchmark.h>

#include <vector>

namespace {

using namespace cellfree;

const double kTheta = 3 * kPi / 37;

void BM_BesselTable(benchmark::State& state) {
    const auto order = static_cast<int>(state.range(0));
    const double x = 0.9 * order;
    for (auto _ : state) benchmark::DoNotOptimize(bessel_j_table(order, x));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BesselTable)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_SincCoeffs(benchmark::State& state) {
    const double rho = static_cast<double>(state.range(0));
    const int l_max = sinc_order_limit(rho);
    const auto quad = QuadratureSpec::covering(required_sinc_samples(rho, l_max));
    for (auto _ : state) benchmark::DoNotOptimize(sinc_fourier_coeffs(rho, l_max, quad));
}
BENCHMARK(BM_SincCoeffs)->Arg(1)->Arg(10)->Arg(100);

void BM_DiscreteDirect(benchmark::State& state) {
    const ArrayConfig ring(1e4, AntennaCount::finite(static_cast<int>(state.range(0))));
    const auto wf = Waveform::with_resolution(1.5);
    for (auto _ : state) benchmark::DoNotOptimize(af_discrete_direct(ring, wf, Displacement{40.0, kTheta}));
}
BENCHMARK(BM_DiscreteDirect)->Arg(256)->Arg(4096);

void BM_DiscreteSeries(benchmark::State& state) {
    const ArrayConfig ring(1e4, AntennaCount::finite(static_cast<int>(state.range(0))));
    const auto wf = Waveform::with_resolution(1.5);
    for (auto _ : state) benchmark::DoNotOptimize(af_discrete_series(ring, wf, Displacement{20.0, kTheta}));
}
BENCHMARK(BM_DiscreteSeries)->Arg(64)->Arg(256);

void BM_ContinuousSeries(benchmark::State& state) {
    const ArrayConfig ring(1e4, AntennaCount::continuous());
    const auto wf = Waveform::with_resolution(1.5);
    const double r = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(af_continuous_series(ring, wf, Displacement{r, kTheta}));
}
BENCHMARK(BM_ContinuousSeries)->Arg(5)->Arg(100);

void BM_ContinuousQuadrature(benchmark::State& state) {
    const ArrayConfig ring(1e4, AntennaCount::continuous());
    const auto wf = Waveform::with_resolution(1.5);
    const Displacement d{static_cast<double>(state.range(0)), kTheta};
    for (auto _ : state) benchmark::DoNotOptimize(evaluate(Evaluator::quadrature, ring, wf, d));
}
BENCHMARK(BM_ContinuousQuadrature)->Arg(5)->Arg(100);

void BM_Fig2Sweep(benchmark::State& state) {
    const ArrayConfig ring(1e4, AntennaCount::finite(256));
    std::vector<double> radii(2001);
    for (std::size_t i = 0; i < radii.size(); ++i) radii[i] = 0.05 * static_cast<double>(i);
    for (auto _ : state)
        benchmark::DoNotOptimize(sweep_radii(Evaluator::direct, ring, Waveform::with_resolution(1.5), kTheta, radii));
}
BENCHMARK(BM_Fig2Sweep)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
