#include <benchmark/benchmark.h>

#include "strmod/generators.hpp"
#include "strmod/ksdecomp.hpp"

using namespace strmod;

namespace {

// the shape of one Krull-Schmidt verification trial
void BM_decompose_trial(benchmark::State& state) {
  const FieldSpec f = FieldSpec::prime(32003);
  std::uint64_t seed = 41;
  for (auto _ : state) {
    state.PauseTiming();
    Rng rng(seed++);
    const ConjugatedSum inst = random_conjugated_sum(rng, f, 2, 4, 6, 4, 3);
    state.ResumeTiming();
    benchmark::DoNotOptimize(decompose(inst.module, seed, 20));
  }
}
BENCHMARK(BM_decompose_trial)->Unit(benchmark::kMillisecond);

void BM_is_indecomposable_band(benchmark::State& state) {
  const FieldSpec f = FieldSpec::prime(32003);
  const ModuleRep m = materialize_band(
      parse_band("band(xxYY)"),
      BandParam::jordan(f, f.from_int(7), static_cast<int>(state.range(0))), f);
  for (auto _ : state)
    benchmark::DoNotOptimize(is_indecomposable(m, Rng(5), 20));
}
BENCHMARK(BM_is_indecomposable_band)->Arg(1)->Arg(3);

} // namespace
