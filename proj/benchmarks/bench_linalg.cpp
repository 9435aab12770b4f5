#include <benchmark/benchmark.h>

#include "strmod/generators.hpp"
#include "strmod/matrix.hpp"

using namespace strmod;

namespace {

Matrix random_square(int n, std::uint64_t seed) {
  Rng rng(seed);
  const FieldSpec f = FieldSpec::prime(32003);
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m.set_int(i, j, static_cast<std::int64_t>(rng.below(32003)));
  return m;
}

void BM_rref_fp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Matrix m = random_square(n, 7);
  for (auto _ : state)
    benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_rref_fp)->Arg(64)->Arg(128)->Arg(256)->Arg(512);

void BM_kernel_fp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  // rank-deficient: product of n x n/2 and n/2 x n
  Rng rng(11);
  const FieldSpec f = FieldSpec::prime(32003);
  Matrix a(f, n, n / 2), b(f, n / 2, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n / 2; ++j) {
      a.set_int(i, j, static_cast<std::int64_t>(rng.below(32003)));
      b.set_int(j, i, static_cast<std::int64_t>(rng.below(32003)));
    }
  const Matrix m = a.mul(b);
  for (auto _ : state)
    benchmark::DoNotOptimize(kernel(m));
}
BENCHMARK(BM_kernel_fp)->Arg(64)->Arg(128)->Arg(256);

void BM_mul_fp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Matrix a = random_square(n, 3), b = random_square(n, 4);
  for (auto _ : state)
    benchmark::DoNotOptimize(a.mul(b));
}
BENCHMARK(BM_mul_fp)->Arg(64)->Arg(128)->Arg(256);

void BM_min_poly(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Matrix m = random_square(n, 5);
  for (auto _ : state)
    benchmark::DoNotOptimize(min_poly(m));
}
BENCHMARK(BM_min_poly)->Arg(16)->Arg(32)->Arg(64);

} // namespace
