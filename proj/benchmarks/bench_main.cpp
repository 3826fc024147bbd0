#include <benchmark/benchmark.h>

#include "quatype/sampling.hpp"
#include "quatype/verifier.hpp"

namespace {

using namespace quatype;

void BM_GeometricProduct(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Signature sig(n / 2 + n % 2, n / 2);
  SplitMix64 rng(1);
  const auto full = SubspacePattern::real(QType::full());
  const auto u = random_float_element(rng, sig, Field::Real, full);
  const auto v = random_float_element(rng, sig, Field::Real, full);
  for (auto _ : state) benchmark::DoNotOptimize(u * v);
  state.SetComplexityN(n);
}
BENCHMARK(BM_GeometricProduct)->DenseRange(2, 10, 2);

void BM_BladeProduct(benchmark::State& state) {
  const Signature sig(6, 6);
  std::uint32_t a = 0x5A5, b = 0x3C3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_sign(Blade{a}, Blade{b}, sig));
    a = (a * 1103515245u + 12345u) & 0xFFF;
  }
}
BENCHMARK(BM_BladeProduct);

void BM_Exponential(benchmark::State& state) {
  const Signature sig(2, 2);
  SplitMix64 rng(2);
  const auto u = random_float_element(rng, sig, Field::Complex, SubspacePattern::parse("23+i01"));
  for (auto _ : state) benchmark::DoNotOptimize(mv_exp(u));
}
BENCHMARK(BM_Exponential);

void BM_AxiomsExhaustive(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto cfg = CheckConfig::defaults_for(Signature(n, 0));
  cfg.strategy = Strategy::Exhaustive;
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_quaternion_axioms(OpKind::Commutator, cfg));
  }
}
BENCHMARK(BM_AxiomsExhaustive)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_TypeTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(emit_table(OpKind::GeometricProduct));
}
BENCHMARK(BM_TypeTable);

}  // namespace

BENCHMARK_MAIN();
