#include <benchmark/benchmark.h>

#include <random>

#include "currentrep/induce.hpp"
#include "currentrep/meataxe.hpp"

using namespace currentrep;

namespace {

FpMatrix random_matrix(std::size_t n, std::uint32_t p, std::mt19937_64& rng) {
  FpMatrix a(n, n, p);
  std::uniform_int_distribution<Fp> d(0, p - 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a.set(i, j, d(rng));
  return a;
}

void BM_matmul(benchmark::State& st) {
  std::mt19937_64 rng(1);
  const auto n = static_cast<std::size_t>(st.range(0));
  auto a = random_matrix(n, 3, rng), b = random_matrix(n, 3, rng);
  for (auto _ : st) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_matmul)->Arg(81)->Arg(243)->Arg(729);

void BM_nullspace(benchmark::State& st) {
  std::mt19937_64 rng(2);
  const auto n = static_cast<std::size_t>(st.range(0));
  auto a = random_matrix(n, 5, rng);
  for (std::size_t j = 0; j < n; ++j) a.set(n - 1, j, 0);  // force a kernel
  for (auto _ : st) benchmark::DoNotOptimize(nullspace(a));
}
BENCHMARK(BM_nullspace)->Arg(125)->Arg(625);

AlgebraPtr sl2(std::uint32_t p, int m) { return CurrentAlgebra::make(make_descriptor(AlgebraKind::SL, 2, p, m)); }

void BM_baby_verma(benchmark::State& st) {
  auto a = sl2(3, static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(build_baby_verma(PChar::zero(a), restricted_weight(*a, {0})));
}
BENCHMARK(BM_baby_verma)->DenseRange(1, 4);

void BM_chop_verma(benchmark::State& st) {
  auto a = sl2(3, static_cast<int>(st.range(0)));
  auto z = build_baby_verma(PChar::zero(a), restricted_weight(*a, {0}));
  for (auto _ : st) {
    SimpleCatalog cat;
    benchmark::DoNotOptimize(chop(z, cat).length());
  }
}
BENCHMARK(BM_chop_verma)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
