#include <benchmark/benchmark.h>

#include <random>

#include "dimwall/cube.hpp"
#include "dimwall/hilbert.hpp"
#include "dimwall/rng.hpp"

using namespace dimwall;

namespace {

void BM_fwht(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    std::mt19937_64 gen(4);
    const auto space = cube::hypercube_space(d);
    std::vector<double> v(space->size());
    for (auto& x : v) x = 2.0 * rng::unit_double(gen()) - 1.0;
    const FuncVec f(space, v);
    for (auto _ : state) benchmark::DoNotOptimize(cube::fourier_coefficients(f));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(space->size()) * d);
}

// The quadratic route the transform replaces, for scale.
void BM_naive_coefficients(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    std::mt19937_64 gen(5);
    const auto space = cube::hypercube_space(d);
    std::vector<double> v(space->size());
    for (auto& x : v) x = 2.0 * rng::unit_double(gen()) - 1.0;
    const FuncVec f(space, v);
    for (auto _ : state) {
        std::vector<double> out(space->size());
        for (std::uint64_t mask = 0; mask < out.size(); ++mask)
            out[mask] =
                hilbert::inner_product(cube::parity(space, cube::ParityIndex(d, mask)), f);
        benchmark::DoNotOptimize(out);
    }
}

} // namespace

BENCHMARK(BM_fwht)->DenseRange(8, 14, 2);
BENCHMARK(BM_naive_coefficients)->DenseRange(8, 10, 2);
