#include <benchmark/benchmark.h>

#include "k3ns/classify.hpp"
#include "k3ns/isometry.hpp"
#include "k3ns/weierstrass.hpp"

using namespace k3ns;

static void BM_SmithNormalForm(benchmark::State& state) {
  Lattice l = parse_lattice_expr("U^3+E8^2");  // the rank-22 K3 lattice
  for (auto _ : state) {
    auto factors = invariant_factors(l.gram);
    benchmark::DoNotOptimize(factors);
  }
}
BENCHMARK(BM_SmithNormalForm);

static void BM_LatticeInvariants(benchmark::State& state) {
  Lattice l = parse_lattice_expr("U(7)+U+E8+A6");
  for (auto _ : state) {
    LatticeInvariants inv = invariants(l);
    benchmark::DoNotOptimize(inv);
  }
}
BENCHMARK(BM_LatticeInvariants);

static void BM_SolveTable1(benchmark::State& state) {
  int p = static_cast<int>(state.range(0));
  for (auto _ : state) {
    LefschetzSolution sol = solve_table1(p);
    benchmark::DoNotOptimize(sol);
  }
}
BENCHMARK(BM_SolveTable1)->Arg(5)->Arg(13)->Arg(19);

static void BM_CyclotomicInverse(benchmark::State& state) {
  Cyclotomic x = Cyclotomic::one(19) - Cyclotomic::zeta_pow(19, 1);
  for (auto _ : state) {
    Cyclotomic inv = x.inv();
    benchmark::DoNotOptimize(inv);
  }
}
BENCHMARK(BM_CyclotomicInverse);

static void BM_ClassifyFibers(benchmark::State& state) {
  WeierstrassModel w = instantiate(catalog_entry("5.6"), 0);
  for (auto _ : state) {
    FiberSummary summary = classify_fibers(w);
    benchmark::DoNotOptimize(summary);
  }
}
BENCHMARK(BM_ClassifyFibers);

static void BM_ClassificationTable(benchmark::State& state) {
  int p = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto rows = classification_table(p);
    benchmark::DoNotOptimize(rows);
  }
}
BENCHMARK(BM_ClassificationTable)->Arg(2)->Arg(3)->Arg(5);

static void BM_AppendixIsometry(benchmark::State& state) {
  for (auto _ : state) {
    IntegerIsometry rho = rho_full();
    benchmark::DoNotOptimize(order(rho, 10));
    benchmark::DoNotOptimize(fixed_sublattice(rho));
  }
}
BENCHMARK(BM_AppendixIsometry);

BENCHMARK_MAIN();
