#include <benchmark/benchmark.h>

#include <map>
#include <tuple>

#include "wkr/harness.hpp"
#include "wkr/query.hpp"
#include "wkr/workload.hpp"

using namespace wkr;

namespace {

const WeightedGraph& graph(std::size_t n, std::size_t m) {
  static std::map<std::pair<std::size_t, std::size_t>, WeightedGraph> cache;
  auto it = cache.find({n, m});
  if (it == cache.end()) it = cache.emplace(std::pair{n, m}, random_graph(n, m, 10, n ^ m)).first;
  return it->second;
}

const std::vector<Query>& queries(std::size_t n, std::size_t m) {
  static std::map<std::pair<std::size_t, std::size_t>, std::vector<Query>> cache;
  auto it = cache.find({n, m});
  if (it == cache.end()) {
    WorkloadSpec spec;
    spec.total = 1000;
    spec.seed = 1;
    std::vector<Query> qs;
    for (const auto& wq : generate_workload(graph(n, m), spec).queries) qs.push_back(wq.query);
    it = cache.emplace(std::pair{n, m}, std::move(qs)).first;
  }
  return it->second;
}

const LabelIndex& index(std::size_t n, std::size_t m, Variant v) {
  static std::map<std::tuple<std::size_t, std::size_t, Variant>, LabelIndex> cache;
  auto it = cache.find({n, m, v});
  if (it == cache.end()) it = cache.emplace(std::tuple{n, m, v}, build_index(graph(n, m), v).index).first;
  return it->second;
}

void BM_Cover(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const WeightedGraph& g = graph(m / 2, m);
  for (auto _ : state) benchmark::DoNotOptimize(approx_min_cover(g));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Cover)->RangeMultiplier(2)->Range(1 << 14, 1 << 19)->Complexity(benchmark::oN)->Unit(benchmark::kMillisecond);

void BM_Build(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto v = static_cast<Variant>(state.range(1));
  const WeightedGraph& g = graph(n, 2 * n);
  std::size_t entries = 0;
  for (auto _ : state) entries = build_index(g, v).index.entry_count();
  state.counters["entries"] = static_cast<double>(entries);
  state.SetLabel(to_string(v));
}
BENCHMARK(BM_Build)
    ->ArgsProduct({{250, 500, 1000},
                   {static_cast<int>(Variant::Wkri), static_cast<int>(Variant::Gwkri), static_cast<int>(Variant::Lwkri)}})
    ->Unit(benchmark::kMillisecond);

void BM_Query(benchmark::State& state) {
  const auto v = static_cast<Variant>(state.range(0));
  const LabelIndex& idx = index(1000, 2000, v);
  const auto& qs = queries(1000, 2000);
  for (auto _ : state)
    for (const Query& q : qs) benchmark::DoNotOptimize(answer(idx, q));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(qs.size()));
  state.SetLabel(to_string(v));
}
BENCHMARK(BM_Query)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);

void BM_Bfs(benchmark::State& state) {
  const WeightedGraph& g = graph(1000, 2000);
  const auto& qs = queries(1000, 2000);
  ConstrainedBfs bfs(g);
  for (auto _ : state)
    for (const Query& q : qs) benchmark::DoNotOptimize(bfs.reachable(q));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(qs.size()));
}
BENCHMARK(BM_Bfs)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
