#include <benchmark/benchmark.h>

#include "sigshift/counting.hpp"
#include "sigshift/enumeration.hpp"
#include "sigshift/periodic_patterns.hpp"
#include "sigshift/shift.hpp"
#include "sigshift/signature.hpp"
#include "sigshift/word.hpp"

namespace {

using namespace sigshift;

void BM_enumerate_necklaces(benchmark::State& state) {
  const int alphabet = static_cast<int>(state.range(0));
  const auto length = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_necklaces(alphabet, length));
  }
}
BENCHMARK(BM_enumerate_necklaces)->Args({2, 12})->Args({2, 16})->Args({3, 10});

void BM_orbit_pattern(benchmark::State& state) {
  const PeriodicWord s(Word::parse("001011212", 3));
  const Signature sigma = Signature::parse("-+-");
  for (auto _ : state) {
    benchmark::DoNotOptimize(orbit_pattern(s, sigma));
  }
}
BENCHMARK(BM_orbit_pattern);

void BM_enumerate_classes_brute(benchmark::State& state) {
  const Signature sigma = Signature::parse("+-");
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_periodic_classes(sigma, n, EnumerationMethod::brute));
  }
}
BENCHMARK(BM_enumerate_classes_brute)->Arg(8)->Arg(12);

void BM_enumerate_classes_characterization(benchmark::State& state) {
  const Signature sigma = Signature::parse("+-");
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        enumerate_periodic_classes(sigma, n, EnumerationMethod::characterization));
  }
}
BENCHMARK(BM_enumerate_classes_characterization)->Arg(6)->Arg(8);

void BM_realizability_check(benchmark::State& state) {
  const Permutation pi = Permutation::parse("12453786");
  const Signature sigma = Signature::parse("+--");
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_periodic_pattern(pi, sigma));
  }
}
BENCHMARK(BM_realizability_check);

void BM_count_table(benchmark::State& state) {
  const int hi = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(CountTable::build(Statistic::C, 2, hi, 2, 5));
  }
}
BENCHMARK(BM_count_table)->Arg(20)->Arg(60);

void BM_count_tent(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_tent(n));
  }
}
BENCHMARK(BM_count_tent)->Arg(30)->Arg(120);

}  // namespace

BENCHMARK_MAIN();
