#include <benchmark/benchmark.h>

#include "dimwall/bound.hpp"
#include "dimwall/cube.hpp"
#include "dimwall/kernel.hpp"

using namespace dimwall;
namespace kx = dimwall::kernel;

namespace {

void BM_kernel_gram(benchmark::State& state) {
    const auto space = cube::hypercube_space(10);
    const auto k = kx::kernel_by_name("gaussian", 10);
    const auto xs = kx::sample_points_iid(*space, static_cast<std::size_t>(state.range(0)), 9);
    for (auto _ : state) benchmark::DoNotOptimize(kx::kernel_gram(k, *space, xs));
}

void BM_method_subspace(benchmark::State& state) {
    const auto space = cube::hypercube_space(10);
    const auto k = kx::kernel_by_name("gaussian", 10);
    const auto xs = kx::sample_points_iid(*space, static_cast<std::size_t>(state.range(0)), 10);
    for (auto _ : state) {
        const Subspace w = kx::method_subspace(k, xs, space);
        benchmark::DoNotOptimize(w.rank());
    }
}

void BM_wall_measurement(benchmark::State& state) {
    // Full pipeline of one kernel-wall trial: sections, orthonormalization,
    // and the family-wide residual average.
    const auto space = cube::hypercube_space(8);
    const auto phis = cube::all_parities(space);
    const auto k = kx::kernel_by_name("gaussian", 8);
    const auto xs = kx::sample_points_iid(*space, static_cast<std::size_t>(state.range(0)), 11);
    for (auto _ : state) {
        const Subspace w = kx::method_subspace(k, xs, space);
        benchmark::DoNotOptimize(bound::mean_residual_sq(phis, w));
    }
}

} // namespace

BENCHMARK(BM_kernel_gram)->Arg(64)->Arg(256);
BENCHMARK(BM_method_subspace)->Arg(64)->Arg(256);
BENCHMARK(BM_wall_measurement)->Arg(32)->Arg(128);

BENCHMARK_MAIN();
