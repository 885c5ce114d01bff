#include <benchmark/benchmark.h>

#include "finembed/combinatorics.hpp"
#include "finembed/constructions.hpp"

namespace {

using namespace finembed;

void BM_LongestApFinite(benchmark::State& state) {
  // Pair sequence elements are sparse; the search is quadratic in the count.
  const auto p = unembeddable_pair(UltimatelyPeriodic::naturals(), 10);
  std::vector<Nat> xs = p.a_elements;
  xs.insert(xs.end(), p.b_elements.begin(), p.b_elements.end());
  const GroundSet s = FiniteSet(xs);
  for (auto _ : state) benchmark::DoNotOptimize(longest_ap(s, 1'000'000'000));
}
BENCHMARK(BM_LongestApFinite);

void BM_LongestApPeriodic(benchmark::State& state) {
  const GroundSet s = UltimatelyPeriodic({true, false, true}, 7, {1, 2, 4});
  const Nat window = static_cast<Nat>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(longest_ap(s, window));
}
BENCHMARK(BM_LongestApPeriodic)->Arg(200)->Arg(1000);

void BM_WindowedDensity(benchmark::State& state) {
  const GroundSet s = UltimatelyPeriodic({}, 12, {0, 5, 7});
  for (auto _ : state) benchmark::DoNotOptimize(windowed_density(s, 1200, 6000));
}
BENCHMARK(BM_WindowedDensity);

}  // namespace
