#include <benchmark/benchmark.h>

#include "monomialis/betti.hpp"
#include "monomialis/bhh.hpp"
#include "monomialis/decomposition.hpp"
#include "monomialis/ggood.hpp"

using namespace monomialis;

static void BM_power(benchmark::State& state) {
  const auto B = build_bhh(BHHParams::make(1, 2, 1));
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto Bn = power(B, n);
    benchmark::DoNotOptimize(Bn);
  }
}
BENCHMARK(BM_power)->Arg(2)->Arg(4)->Arg(6);

static void BM_minimalize(benchmark::State& state) {
  const auto B = build_bhh(BHHParams::make(2, 2, 1));
  const auto Bn = power(B, static_cast<unsigned>(state.range(0)));
  std::vector<Monomial> gens = Bn.gens();
  for (auto _ : state) {
    auto out = minimal_generators(gens);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_minimalize)->Arg(3)->Arg(5);

static void BM_decomposition(benchmark::State& state) {
  const auto B = build_bhh(BHHParams::make(1, 2, 1));
  const auto Bn = power(B, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    auto primes = associated_primes(Bn);
    benchmark::DoNotOptimize(primes);
  }
}
BENCHMARK(BM_decomposition)->Arg(2)->Arg(4);

static void BM_betti(benchmark::State& state) {
  const auto B = build_bhh(BHHParams::make(1, 2, 1));
  const auto Bn = power(B, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    auto table = graded_betti(Bn);
    benchmark::DoNotOptimize(table);
  }
}
BENCHMARK(BM_betti)->Arg(1)->Arg(2);

static void BM_countc(benchmark::State& state) {
  for (auto _ : state) {
    BigInt total = 0;
    for (int m = 1; m <= 6; ++m)
      for (long long n = 1; n <= 14; ++n) total += countc(m, 2, n);
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_countc);

static void BM_census(benchmark::State& state) {
  for (auto _ : state) {
    auto primes = predicted_ass_r2(4, 1, 5);
    benchmark::DoNotOptimize(primes);
  }
}
BENCHMARK(BM_census);

BENCHMARK_MAIN();
