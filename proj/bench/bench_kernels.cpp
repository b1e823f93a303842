// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "specsl/constructions.hpp"
#include "specsl/extension.hpp"
#include "specsl/kernels.hpp"
#include "specsl/morphisms.hpp"

namespace {

using namespace specsl;

// |S| = 4 * range(0) with a nontrivial [= from the second factor.
SpecSemilattice sized_structure(int k) {
  return product(diamond(), k == 1 ? chain(1) : k == 2 ? truncated_naturals(1)
                                                       : truncated_naturals(2));
}

void BM_SimMatrixSerial(benchmark::State& state) {
  const auto s = sized_structure(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::sim_matrix_serial(s));
  state.counters["n"] = s.size();
}

void BM_SimMatrixParallel(benchmark::State& state) {
  const auto s = sized_structure(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::sim_matrix_parallel(s));
  state.counters["n"] = s.size();
}

void BM_BuildExtension(benchmark::State& state) {
  const auto s = sized_structure(static_cast<int>(state.range(0)));
  ExtensionOptions opts;
  opts.parallel = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(build_extension(s, opts));
  state.counters["n"] = s.size();
}

void BM_HomSearch(benchmark::State& state) {
  const auto ext = build_extension(diamond());
  const auto target = product(counterexample_target(), chain(2));
  HomSearchOptions opts;
  opts.parallel = state.range(0) != 0;
  opts.budget = 1'000'000'000;
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_homomorphisms(ext.tilde_spec, target, opts));
}

}  // namespace

BENCHMARK(BM_SimMatrixSerial)->Arg(1)->Arg(2)->Arg(3);
BENCHMARK(BM_SimMatrixParallel)->Arg(1)->Arg(2)->Arg(3);
BENCHMARK(BM_BuildExtension)->Args({3, 0})->Args({3, 1});
BENCHMARK(BM_HomSearch)->Arg(0)->Arg(1);

BENCHMARK_MAIN();
