// Serial reference path versus the OpenMP kernels on a retail-like database.
#include <benchmark/benchmark.h>

#include "frim/fuzzifier.hpp"
#include "frim/generator.hpp"
#include "frim/miner.hpp"

namespace {

const frim::QuantitativeDatabase& database() {
  static const auto db = [] {
    frim::SyntheticShape shape;
    shape.transactions = 20000;
    shape.items = 4000;
    return frim::synthetic_database(7, shape);
  }();
  return db;
}

const frim::MembershipFunctionConfig& membership() {
  static const frim::MembershipFunctionConfig config({{"L", 1}, {"M", 21}, {"H", 31}});
  return config;
}

void BM_Transform(benchmark::State& state) {
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(frim::transform_database(database(), membership(), threads));
}
BENCHMARK(BM_Transform)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Mine(benchmark::State& state) {
  const auto thresholds = frim::Thresholds{30.0, 80.0};
  const auto fz = frim::fuzzify_database(database(), membership(), thresholds.min_rare_abs);
  frim::MinerOptions options;
  options.threads = static_cast<int>(state.range(0));
  std::size_t patterns = 0;
  for (auto _ : state) {
    auto result = frim::mine_revised(fz.revised, thresholds, options);
    patterns = result.fris.size();
    benchmark::DoNotOptimize(result);
  }
  state.counters["patterns"] = static_cast<double>(patterns);
}
BENCHMARK(BM_Mine)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
