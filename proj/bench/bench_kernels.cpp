// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>

#include <random>

#include "k0/heap_core.hpp"
#include "k0/intlinalg.hpp"
#include "k0/toycats.hpp"

using namespace k0;

namespace {

heap::FiniteHeapTable cyclic_heap(benchmark::State& state) {
  return heap::heap_from_group(heap::cyclic_group(static_cast<std::size_t>(state.range(0))));
}

void BM_HeapAxiomsSerial(benchmark::State& state) {
  const auto t = cyclic_heap(state);
  for (auto _ : state) benchmark::DoNotOptimize(heap::serial::check_heap_axioms(t));
}

void BM_HeapAxiomsParallel(benchmark::State& state) {
  const auto t = cyclic_heap(state);
  for (auto _ : state) benchmark::DoNotOptimize(heap::check_heap_axioms(t));
}

struct CosetInput {
  linalg::Lattice lattice;
  std::vector<linalg::IntVector> vectors;
};

CosetInput coset_input(std::size_t count) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> entry(-9, 9), wide(-100000, 100000);
  linalg::IntegerMatrix a(5, 6);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 6; ++j) a(i, j) = entry(rng);
  CosetInput in{linalg::hermite_normal_form(a), {}};
  in.vectors.assign(count, linalg::IntVector(6));
  for (auto& v : in.vectors)
    for (auto& x : v) x = wide(rng);
  return in;
}

void BM_CosetRepsSerial(benchmark::State& state) {
  const auto in = coset_input(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(linalg::serial::canonical_coset_reps(in.lattice, in.vectors));
}

void BM_CosetRepsParallel(benchmark::State& state) {
  const auto in = coset_input(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(linalg::canonical_coset_reps(in.lattice, in.vectors));
}

void BM_GluingSerial(benchmark::State& state) {
  const int bound = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(toycats::serial::gluing_check(toycats::Kind::FinSet, bound, toycats::standard_pushout_law));
}

void BM_GluingParallel(benchmark::State& state) {
  const int bound = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(toycats::gluing_check(toycats::Kind::FinSet, bound));
}

}  // namespace

BENCHMARK(BM_HeapAxiomsSerial)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HeapAxiomsParallel)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CosetRepsSerial)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CosetRepsParallel)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GluingSerial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GluingParallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
