// Serial vs OpenMP timings for the four parallel kernels.  The first range
// argument selects the execution mode: 0 serial, 1 parallel.

#include <benchmark/benchmark.h>

#include "endolat/claims.hpp"
#include "endolat/corpus.hpp"
#include "endolat/monoid.hpp"

using namespace endolat;

namespace {

Exec mode(benchmark::State const& state) {
  return state.range(0) == 0 ? Exec::kSerial : Exec::kParallel;
}

// Sub(Z2xZ2xZ2) has 16 elements and a sizeable End.
LatticePtr const& big_lattice() {
  static LatticePtr L = subgroup_lattice("Z2xZ2xZ2");
  return L;
}

void BM_Endomorphisms(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_endomorphisms(big_lattice(), mode(state)));
  }
}

void BM_CayleyTable(benchmark::State& state) {
  auto const elems = enumerate_endomorphisms(subgroup_lattice("Z2xZ4"), Exec::kSerial);
  for (auto _ : state) benchmark::DoNotOptimize(cayley_table(elems, mode(state)));
  state.counters["order"] = static_cast<double>(elems.size());
}

void BM_CongruencePairs(benchmark::State& state) {
  EndoMonoid const m = full_endo_monoid(subgroup_lattice("Z2xZ4"), Exec::kSerial);
  for (auto _ : state) {
    benchmark::DoNotOptimize(delta_relation(m, CongruenceMethod::kDefinition, mode(state)));
    benchmark::DoNotOptimize(nabla_relation(m, CongruenceMethod::kDefinition, mode(state)));
  }
}

void BM_LatticeGeneration(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_lattices(8, mode(state)));
}

void BM_Sweep(benchmark::State& state) {
  auto const corpus = lattice_corpus(7, true, Exec::kSerial);
  SweepSpec spec;
  spec.max_n = 7;
  spec.generators = 1;
  spec.exec = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(counterexample_search(spec, corpus));
}

}  // namespace

BENCHMARK(BM_Endomorphisms)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CayleyTable)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond)->UseRealTime();
BENCHMARK(BM_CongruencePairs)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond)->UseRealTime();
BENCHMARK(BM_LatticeGeneration)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Sweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
