#include <benchmark/benchmark.h>

#include "fusionscan/enumerator.hpp"
#include "fusionscan/pipeline.hpp"

using namespace fusionscan;

static void BM_Enumerate(benchmark::State& state) {
  const Int N = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(enumerateSignatures(N));
}
BENCHMARK(BM_Enumerate)->Arg(84)->Arg(90)->Arg(120)->Arg(240);

static void BM_Filters(benchmark::State& state) {
  const Int N = state.range(0);
  const auto cands = enumerateSignatures(N);
  auto ids = defaultRuleIds();
  if (N == 90) ids.push_back("R14");
  for (auto _ : state) benchmark::DoNotOptimize(runFilters(cands, ids, N));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cands.size()));
}
BENCHMARK(BM_Filters)->Arg(84)->Arg(90);

static const char* const kSolveCases[] = {
    "(1,1;3,1;5,1;7,1)", "(1,2;4,2;5,2)", "(1,2;3,8;4,1)", "(1,2;2,2;4,5)", "(1,2;2,4;6,2)",
};

static void BM_Solve(benchmark::State& state) {
  const auto sig = parseSignature(kSolveCases[state.range(0)]);
  std::uint64_t nodes = 0;
  for (auto _ : state) nodes = solve(sig).nodesVisited;
  state.SetLabel(kSolveCases[state.range(0)]);
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_Solve)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

static void BM_Classify(benchmark::State& state) {
  const Int N = state.range(0);
  ClassifyConfig config;
  config.enableR14 = N == 90;
  for (auto _ : state) benchmark::DoNotOptimize(classify(N, config));
}
BENCHMARK(BM_Classify)->Arg(84)->Arg(90)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
