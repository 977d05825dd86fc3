#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "ease/ease.hpp"

namespace {

ease::InteractionMatrix synthetic(std::size_t users, std::size_t items) {
  ease::SyntheticConfig cfg;
  cfg.n_users = users;
  cfg.n_items = items;
  cfg.n_clusters = 10;
  return ease::make_synthetic(cfg);
}

void BM_BuildGram(benchmark::State& state) {
  const auto x = synthetic(static_cast<std::size_t>(state.range(0)), 500);
  for (auto _ : state) benchmark::DoNotOptimize(ease::build_gram(x));
  state.counters["nnz"] = static_cast<double>(x.nnz());
}
BENCHMARK(BM_BuildGram)->Arg(1000)->Arg(5000)->Arg(20000)->Unit(benchmark::kMillisecond);

void BM_Solve(benchmark::State& state) {
  const auto gram = ease::build_gram(synthetic(20000, static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) {
    auto copy = gram;
    benchmark::DoNotOptimize(ease::solve(std::move(copy), 100.0, 1));
  }
  state.counters["items"] = static_cast<double>(gram.n_items());
}
BENCHMARK(BM_Solve)->Arg(250)->Arg(500)->Arg(1000)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_ScoreAndRank(benchmark::State& state) {
  const auto x = synthetic(5000, static_cast<std::size_t>(state.range(0)));
  ease::EaseScorer scorer(ease::solve(ease::build_gram(x), 100.0));
  std::vector<ease::UserHistory> users;
  for (std::size_t u = 0; u < 500; ++u) {
    const auto row = x.row(u);
    users.push_back({x.user_vocab().id(u), {row.items.begin(), row.items.end()}, {row.values.begin(), row.values.end()}});
  }
  for (auto _ : state) benchmark::DoNotOptimize(ease::recommend_batch(users, scorer, 100, true, 1));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(users.size()));
}
BENCHMARK(BM_ScoreAndRank)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
