// Serial vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include "padicsum/kernels.hpp"
#include "padicsum/sequences.hpp"

using namespace padicsum;

namespace {

std::vector<std::uint64_t> odd_primes(std::uint64_t pmax) {
  auto primes = primes_up_to(pmax);
  if (!primes.empty() && primes.front() == 2) primes.erase(primes.begin());
  return primes;
}

kernels::VerifyGrid identity_grid(unsigned long n_max) {
  kernels::VerifyGrid g;
  for (unsigned k = 1; k <= 10; ++k) g.ks.push_back(k);
  g.n_max = n_max;
  for (long x = -5; x <= 5; ++x) g.xs.emplace_back(x);
  g.xs.emplace_back(1, 3);
  g.xs.emplace_back(-7, 4);
  return g;
}

kernels::VerifyGrid certificate_grid(unsigned long n_max) {
  kernels::VerifyGrid g;
  g.ks = {1, 2, 3, 4, 5};
  g.n_max = n_max;
  for (long x = -3; x <= 3; ++x)
    if (x != 0) g.xs.emplace_back(x);
  g.primes = {Prime(2), Prime(3), Prime(5), Prime(7)};
  return g;
}

IntPoly level_poly() {
  IntPoly P;
  for (unsigned i = 0; i <= 6; ++i) P += IntPoly::monomial(BigInt(static_cast<long>(i) - 3), i);
  return P;
}

void BM_KurepaDigitsSerial(benchmark::State& state) {
  const auto primes = odd_primes(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::kurepa_digits_serial(primes));
}

void BM_KurepaDigitsParallel(benchmark::State& state) {
  const auto primes = odd_primes(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::kurepa_digits_parallel(primes));
}

void BM_LevelSumSerial(benchmark::State& state) {
  const IntPoly P = level_poly();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::level_sum_serial(P, state.range(0)));
}

void BM_LevelSumParallel(benchmark::State& state) {
  const IntPoly P = level_poly();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::level_sum_parallel(P, state.range(0)));
}

void BM_IdentityGridSerial(benchmark::State& state) {
  SummationFamily family;
  const auto g = identity_grid(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::identity_grid_serial(g, family));
}

void BM_IdentityGridParallel(benchmark::State& state) {
  SummationFamily family;
  const auto g = identity_grid(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::identity_grid_parallel(g, family));
}

void BM_CertificateGridSerial(benchmark::State& state) {
  SummationFamily family;
  const auto g = certificate_grid(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::certificate_grid_serial(g, family));
}

void BM_CertificateGridParallel(benchmark::State& state) {
  SummationFamily family;
  const auto g = certificate_grid(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::certificate_grid_parallel(g, family));
}

}  // namespace

BENCHMARK(BM_KurepaDigitsSerial)->Arg(10000)->Arg(30000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KurepaDigitsParallel)->Arg(10000)->Arg(30000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LevelSumSerial)->Arg(1 << 12)->Arg(1 << 16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LevelSumParallel)->Arg(1 << 12)->Arg(1 << 16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IdentityGridSerial)->Arg(10)->Arg(25)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IdentityGridParallel)->Arg(10)->Arg(25)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CertificateGridSerial)->Arg(25)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CertificateGridParallel)->Arg(25)->Arg(50)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
