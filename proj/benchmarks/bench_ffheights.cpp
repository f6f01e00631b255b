#include <benchmark/benchmark.h>

#include "hypcert/factor.hpp"
#include "hypcert/ffheights.hpp"

using namespace hypcert;

namespace {

void BM_FactorDegree(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<Poly> polys;
  for (int k = 0; k < 64; ++k) polys.push_back(random_poly(rng, static_cast<int>(state.range(0)), 100));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(factor(polys[i++ % polys.size()]));
}
BENCHMARK(BM_FactorDegree)->Arg(4)->Arg(10)->Arg(20)->Unit(benchmark::kMicrosecond);

void BM_StressSample(benchmark::State& state) {
  StressOptions o;
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(stress_sample(o, i++));
}
BENCHMARK(BM_StressSample)->Unit(benchmark::kMicrosecond);

void BM_WangExample(benchmark::State& state) {
  const Poly t = Poly::monomial(1);
  const RatMap x({Poly(1), t, t * t, pow(t, 3) - Poly(2)});
  const std::vector<std::vector<Rational>> h{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 1, 1, 1}};
  const std::vector<Place> s{Place::infinity(), Place::finite(t), Place::finite(t - Poly(1))};
  for (auto _ : state) benchmark::DoNotOptimize(wang_smt_check(x, h, s));
}
BENCHMARK(BM_WangExample)->Unit(benchmark::kMicrosecond);

}  // namespace
