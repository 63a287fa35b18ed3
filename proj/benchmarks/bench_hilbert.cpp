#include <benchmark/benchmark.h>

#include <random>

#include "dimwall/cube.hpp"
#include "dimwall/hilbert.hpp"
#include "dimwall/rng.hpp"

using namespace dimwall;

namespace {

FuncVec random_func(const SpacePtr& space, std::mt19937_64& gen) {
    std::vector<double> v(space->size());
    for (auto& x : v) x = 2.0 * rng::unit_double(gen()) - 1.0;
    return FuncVec(space, std::move(v));
}

void BM_inner_product(benchmark::State& state) {
    std::mt19937_64 gen(1);
    const auto space = cube::hypercube_space(static_cast<int>(state.range(0)));
    const auto f = random_func(space, gen);
    const auto g = random_func(space, gen);
    for (auto _ : state) benchmark::DoNotOptimize(hilbert::inner_product(f, g));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(space->size()));
}

void BM_orthonormalize_sections(benchmark::State& state) {
    std::mt19937_64 gen(2);
    const auto space = cube::hypercube_space(10);
    std::vector<FuncVec> fs;
    for (long i = 0; i < state.range(0); ++i) fs.push_back(random_func(space, gen));
    for (auto _ : state) {
        const Subspace w = hilbert::orthonormalize(fs);
        benchmark::DoNotOptimize(w.rank());
    }
}

void BM_residual_sq(benchmark::State& state) {
    std::mt19937_64 gen(3);
    const auto space = cube::hypercube_space(10);
    std::vector<FuncVec> fs;
    for (long i = 0; i < state.range(0); ++i) fs.push_back(random_func(space, gen));
    const Subspace w = hilbert::orthonormalize(fs);
    const auto f = random_func(space, gen);
    for (auto _ : state) benchmark::DoNotOptimize(hilbert::residual_sq(f, w));
}

} // namespace

BENCHMARK(BM_inner_product)->Arg(8)->Arg(12)->Arg(14);
BENCHMARK(BM_orthonormalize_sections)->Arg(32)->Arg(128);
BENCHMARK(BM_residual_sq)->Arg(32)->Arg(128);
