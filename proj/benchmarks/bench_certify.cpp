#include <benchmark/benchmark.h>

#include "hypcert/certificate.hpp"
#include "hypcert/config_io.hpp"
#include "hypcert/rv_constants.hpp"
#include "hypcert/weight_search.hpp"

using namespace hypcert;

namespace {

const ConfigFile& corollary() {
  static const ConfigFile c = load_config(std::string(HYPCERT_DATA_DIR) + "/corollary.json");
  return c;
}

void BM_EvaluateCz(benchmark::State& state) {
  const auto cfg = SurfaceConfig::build(corollary().spec);
  const WeightedBoundary wb(cfg, *corollary().weights);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_cz(cfg, wb));
}
BENCHMARK(BM_EvaluateCz);

void BM_CertifyCorollary(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(serialize_certificate(certify(corollary())));
}
BENCHMARK(BM_CertifyCorollary)->Unit(benchmark::kMillisecond);

void BM_FindNb(benchmark::State& state) {
  const auto cfg = SurfaceConfig::build(corollary().spec);
  const WeightedBoundary wb(cfg, *corollary().weights);
  const auto report = evaluate_cz(cfg, wb);
  for (auto _ : state) benchmark::DoNotOptimize(find_Nb(cfg, wb, report, make_rational(1, 176)));
}
BENCHMARK(BM_FindNb)->Unit(benchmark::kMillisecond);

void BM_Search(benchmark::State& state) {
  const auto cfg = SurfaceConfig::build(corollary().spec);
  SearchOptions o;
  o.bound = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(search(cfg, o));
}
BENCHMARK(BM_Search)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
