// SPDX-License-Identifier: Apache-2.0
// Grid 2D transform against the diagonal 1D transform, naive and FFT paths.

#include <benchmark/benchmark.h>

#include <random>

#include "jcas/dft.hpp"
#include "jcas/grid_estimator.hpp"

namespace {

jcas::SymbolMatrix random_block(std::size_t n)
{
    std::mt19937_64 gen(n);
    std::normal_distribution<double> g;
    jcas::SymbolMatrix m(n, n);
    for (auto& v : m.values()) {
        v = {g(gen), g(gen)};
    }
    return m;
}

std::vector<jcas::cplx> random_diag(std::size_t n)
{
    std::mt19937_64 gen(n + 1);
    std::normal_distribution<double> g;
    std::vector<jcas::cplx> d(n);
    for (auto& v : d) {
        v = {g(gen), g(gen)};
    }
    return d;
}

template <jcas::TransformPath Path>
void grid2d(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto block = random_block(n);
    for (auto _ : state) {
        auto z = jcas::range_doppler_spectrum(block, Path);
        benchmark::DoNotOptimize(z.values().data());
    }
    state.SetComplexityN(state.range(0));
}

template <jcas::TransformPath Path>
void diag(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto d = random_diag(n);
    std::vector<jcas::cplx> out(n);
    for (auto _ : state) {
        jcas::dft(d, out, jcas::Direction::Forward, Path);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetComplexityN(state.range(0));
}

} // namespace

BENCHMARK(grid2d<jcas::TransformPath::Naive>)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMicrosecond);
BENCHMARK(diag<jcas::TransformPath::Naive>)->Arg(64)->Arg(128)->Arg(256)->Arg(480)->Unit(benchmark::kMicrosecond);
BENCHMARK(grid2d<jcas::TransformPath::Fast>)->Arg(64)->Arg(128)->Arg(256)->Arg(480)->Unit(benchmark::kMicrosecond);
BENCHMARK(diag<jcas::TransformPath::Fast>)->Arg(64)->Arg(128)->Arg(256)->Arg(480)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
