#include <benchmark/benchmark.h>

#include <random>

#include "primepoly/census.hpp"
#include "primepoly/constructions.hpp"
#include "primepoly/exceptional.hpp"
#include "primepoly/primes.hpp"
#include "primepoly/roots.hpp"
#include "primepoly/sampling.hpp"

using namespace primepoly;

static void BM_PrimeCensusFixed(benchmark::State& state) {
  const auto cert = fixed_example(FixedExample::deg5_nplus3);
  for (auto _ : state) benchmark::DoNotOptimize(prime_census(cert.f));
}
BENCHMARK(BM_PrimeCensusFixed);

static void BM_PrimeCensusRandom(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<FactoredPolynomial> inputs;
  for (int i = 0; i < 64; ++i) {
    inputs.emplace_back(std::vector<RatPolynomial>{random_integer_poly(rng, 1, 3, 9), random_integer_poly(rng, 1, 3, 9)});
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(prime_census(inputs[i++ % inputs.size()]));
}
BENCHMARK(BM_PrimeCensusRandom);

static void BM_FindMultiplier(benchmark::State& state) {
  const auto primes = pairing_primes(static_cast<int>(state.range(0)));
  const Integer M = check_pairing(primes).left;
  for (auto _ : state) benchmark::DoNotOptimize(find_multiplier(M, false, 1000000));
}
BENCHMARK(BM_FindMultiplier)->DenseRange(4, 12, 4);

static void BM_IsPrimeLarge(benchmark::State& state) {
  const Integer p = (Integer(1) << 127) - 1;
  for (auto _ : state) benchmark::DoNotOptimize(is_prime(p));
}
BENCHMARK(BM_IsPrimeLarge);

static void BM_IsolateRoots(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const int degree = static_cast<int>(state.range(0));
  std::vector<RatPolynomial> inputs;
  for (int i = 0; i < 32; ++i) inputs.push_back(random_integer_poly(rng, degree, degree, 9));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(isolate_roots(inputs[i++ % inputs.size()]));
}
BENCHMARK(BM_IsolateRoots)->Arg(4)->Arg(8)->Arg(16);

static void BM_ExceptionalSearch(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(search_exceptional(degree, 3));
}
BENCHMARK(BM_ExceptionalSearch)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
