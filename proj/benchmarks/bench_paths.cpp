#include <benchmark/benchmark.h>

#include "signedteams/path_counts.hpp"
#include "signedteams/sbp.hpp"
#include "signedteams/synthetic.hpp"

namespace st = signedteams;

namespace {

const st::SignedGraph& large_graph() {
  static const auto g = st::random_connected_signed_graph(30000, 200000, 0.2, 7);
  return g;
}

void BM_SpSignCounts(benchmark::State& state) {
  const auto& g = large_graph();
  st::ShortestPathSignCounter counter(g);
  st::NodeId source = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(counter.run(source).pos.data());
    source = (source + 7919) % static_cast<st::NodeId>(g.node_count());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.edge_count()));
}
BENCHMARK(BM_SpSignCounts)->Unit(benchmark::kMillisecond);

void BM_SbpHeuristic(benchmark::State& state) {
  const auto g = st::random_connected_signed_graph(static_cast<std::size_t>(state.range(0)),
                                                   static_cast<std::size_t>(state.range(0)) * 4,
                                                   0.25, 11);
  st::NodeId source = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(st::sbp_heuristic_counts(g, source).positive.data());
    source = (source + 1) % static_cast<st::NodeId>(g.node_count());
  }
}
BENCHMARK(BM_SbpHeuristic)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_SbpExact(benchmark::State& state) {
  const auto g = st::random_connected_signed_graph(60, 150, 0.25, 13);
  st::ExactSearchOptions o;
  o.max_path_len = static_cast<std::uint32_t>(state.range(0));
  o.positive_only = true;
  st::NodeId source = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(st::sbp_exact_reachability(g, source, o).positive.data());
    source = (source + 1) % static_cast<st::NodeId>(g.node_count());
  }
}
BENCHMARK(BM_SbpExact)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace
