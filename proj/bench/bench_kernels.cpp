#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "atmoead/kernels.hpp"

using namespace atmoead;

namespace {

std::vector<ObjectiveVector> cloud(std::size_t n, std::size_t m, std::uint64_t seed)
{
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<ObjectiveVector> out(n, ObjectiveVector(m));
    for (auto& p : out) {
        for (auto& v : p) { v = u(gen); }
    }
    return out;
}

template <auto Kernel>
void nearest(benchmark::State& state)
{
    auto const from = cloud(static_cast<std::size_t>(state.range(0)), 3, 1);
    auto const to = cloud(10000, 3, 2);
    for (auto _ : state) { benchmark::DoNotOptimize(Kernel(from, to)); }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void nearest_other(benchmark::State& state)
{
    auto const pts = cloud(static_cast<std::size_t>(state.range(0)), 3, 3);
    for (auto _ : state) { benchmark::DoNotOptimize(Kernel(pts)); }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void energy(benchmark::State& state)
{
    auto const pts = cloud(static_cast<std::size_t>(state.range(0)), 3, 4);
    for (auto _ : state) { benchmark::DoNotOptimize(Kernel(pts, 4.0)); }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void dominated(benchmark::State& state)
{
    auto const pts = cloud(200, 5, 5);
    std::vector<double> const lower(5, 0.0);
    std::vector<double> const ref(5, 1.1);
    auto const samples = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) { benchmark::DoNotOptimize(Kernel(pts, lower, ref, samples, 7)); }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

} // namespace

BENCHMARK(nearest<kernels::serial::nearest_distances>)->Name("nearest_distances/serial")->Arg(105)->Arg(1000);
BENCHMARK(nearest<kernels::omp::nearest_distances>)->Name("nearest_distances/omp")->Arg(105)->Arg(1000);
BENCHMARK(nearest_other<kernels::serial::nearest_other_distances>)->Name("nearest_other_distances/serial")->Arg(210)->Arg(2000);
BENCHMARK(nearest_other<kernels::omp::nearest_other_distances>)->Name("nearest_other_distances/omp")->Arg(210)->Arg(2000);
BENCHMARK(energy<kernels::serial::energy_contributions>)->Name("energy_contributions/serial")->Arg(210)->Arg(2000);
BENCHMARK(energy<kernels::omp::energy_contributions>)->Name("energy_contributions/omp")->Arg(210)->Arg(2000);
BENCHMARK(dominated<kernels::serial::dominated_samples>)->Name("dominated_samples/serial")->Arg(100000);
BENCHMARK(dominated<kernels::omp::dominated_samples>)->Name("dominated_samples/omp")->Arg(100000);

BENCHMARK_MAIN();
