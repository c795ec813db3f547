// Serial reference kernels against their OpenMP counterparts.
//
//   ./bench_kernels --benchmark_filter=Successors
//   OMP_NUM_THREADS=8 ./bench_kernels

#include <benchmark/benchmark.h>

#include <vector>

#include "movegraph/graph.hpp"
#include "movegraph/kernels.hpp"
#include "movegraph/subadd.hpp"

namespace {

using namespace movegraph;

void BM_SuccessorsSerial(benchmark::State& state) {
    const auto mat = subadd_matrix(modulus(static_cast<std::uint64_t>(state.range(0))));
    std::vector<vertex_id> successor(vertex_count(mat.mod().value(), 2));
    for (auto _ : state) {
        kernels::fill_successors_serial(mat, successor);
        benchmark::DoNotOptimize(successor.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(successor.size()));
}

void BM_SuccessorsParallel(benchmark::State& state) {
    const auto mat = subadd_matrix(modulus(static_cast<std::uint64_t>(state.range(0))));
    std::vector<vertex_id> successor(vertex_count(mat.mod().value(), 2));
    for (auto _ : state) {
        kernels::fill_successors(mat, successor);
        benchmark::DoNotOptimize(successor.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(successor.size()));
}

void BM_LevelsSerial(benchmark::State& state) {
    const auto r = static_cast<unsigned>(state.range(0));
    std::vector<std::uint8_t> level(std::size_t{1} << (2 * r));
    for (auto _ : state) {
        kernels::classify_levels_serial(r, level);
        benchmark::DoNotOptimize(level.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(level.size()));
}

void BM_LevelsParallel(benchmark::State& state) {
    const auto r = static_cast<unsigned>(state.range(0));
    std::vector<std::uint8_t> level(std::size_t{1} << (2 * r));
    for (auto _ : state) {
        kernels::classify_levels(r, level);
        benchmark::DoNotOptimize(level.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(level.size()));
}

void BM_InDegreesSerial(benchmark::State& state) {
    const auto g = build(subadd_matrix(modulus(std::uint64_t{1} << state.range(0))));
    std::vector<std::uint32_t> in_degree(g.size());
    for (auto _ : state) {
        kernels::count_in_degrees_serial(g.successor(), in_degree);
        benchmark::DoNotOptimize(in_degree.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.size()));
}

void BM_InDegreesParallel(benchmark::State& state) {
    const auto g = build(subadd_matrix(modulus(std::uint64_t{1} << state.range(0))));
    std::vector<std::uint32_t> in_degree(g.size());
    for (auto _ : state) {
        kernels::count_in_degrees(g.successor(), in_degree);
        benchmark::DoNotOptimize(in_degree.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.size()));
}

}  // namespace

BENCHMARK(BM_SuccessorsSerial)->Arg(257)->Arg(1021)->Arg(4093)->UseRealTime();
BENCHMARK(BM_SuccessorsParallel)->Arg(257)->Arg(1021)->Arg(4093)->UseRealTime();
BENCHMARK(BM_LevelsSerial)->Arg(8)->Arg(10)->Arg(12)->UseRealTime();
BENCHMARK(BM_LevelsParallel)->Arg(8)->Arg(10)->Arg(12)->UseRealTime();
BENCHMARK(BM_InDegreesSerial)->Arg(8)->Arg(10)->UseRealTime();
BENCHMARK(BM_InDegreesParallel)->Arg(8)->Arg(10)->UseRealTime();

BENCHMARK_MAIN();
