#include <benchmark/benchmark.h>

#include "strmod/generators.hpp"
#include "strmod/modrep.hpp"

using namespace strmod;

namespace {

void BM_hom_basis(benchmark::State& state) {
  const int budget = static_cast<int>(state.range(0));
  Rng rng(17);
  const FieldSpec f = FieldSpec::prime(32003);
  const ModuleRep m = random_module(rng, f, budget);
  for (auto _ : state)
    benchmark::DoNotOptimize(hom_basis(m, m));
}
BENCHMARK(BM_hom_basis)->Arg(12)->Arg(24)->Arg(48);

void BM_hom_basis_dense(benchmark::State& state) {
  const int budget = static_cast<int>(state.range(0));
  Rng rng(17);
  const FieldSpec f = FieldSpec::prime(32003);
  const ModuleRep m = random_module(rng, f, budget);
  for (auto _ : state)
    benchmark::DoNotOptimize(hom_basis_dense(m, m));
}
BENCHMARK(BM_hom_basis_dense)->Arg(12)->Arg(24);

void BM_socle_series(benchmark::State& state) {
  Rng rng(23);
  const FieldSpec f = FieldSpec::prime(32003);
  const ModuleRep m = random_module(rng, f, static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(socle_series(m));
}
BENCHMARK(BM_socle_series)->Arg(16)->Arg(48);

} // namespace
