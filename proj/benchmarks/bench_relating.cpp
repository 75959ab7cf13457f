#include <benchmark/benchmark.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "relating/cnf.hpp"
#include "relating/flow.hpp"
#include "relating/generate.hpp"
#include "relating/graph.hpp"
#include "relating/oracle.hpp"
#include "relating/poly.hpp"
#include "relating/reduction.hpp"

namespace {

// Path plus widely spaced chords; girth 102, so the decision procedure sees
// a graph with no short cycles at any size.
relating::Graph chord_path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  for (int i = 0; i + 101 < n; i += 202) edges.emplace_back(i, i + 101);
  return relating::Graph::build(n, edges);
}

relating::Graph sparse_clean_graph(int n) {
  for (std::uint64_t seed = 17;; ++seed) {
    try {
      relating::Graph g = relating::random_graph_avoiding(n, 2.2 / n, {4, 6}, seed, 50);
      if (g.edge_count() > 0) return g;
    } catch (const std::runtime_error&) {
    }
  }
}

void BM_poly_query(benchmark::State& state) {
  relating::Graph g = chord_path(static_cast<int>(state.range(0)));
  int x = g.vertex_count() / 2, y = x + 1;
  for (auto _ : state)
    benchmark::DoNotOptimize(relating::is_relating_poly(g, x, y, true).relating);
}
BENCHMARK(BM_poly_query)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_brute_query(benchmark::State& state) {
  relating::Graph g = sparse_clean_graph(static_cast<int>(state.range(0)));
  auto [x, y] = g.edges().front();
  for (auto _ : state)
    benchmark::DoNotOptimize(relating::is_relating_brute(g, x, y).relating());
}
BENCHMARK(BM_brute_query)->Arg(12)->Arg(18)->Arg(24);

void BM_cycle_scan(benchmark::State& state) {
  relating::Graph g = chord_path(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(relating::has_cycle_of_length(g, 4));
    benchmark::DoNotOptimize(relating::has_cycle_of_length(g, 6));
  }
}
BENCHMARK(BM_cycle_scan)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_max_flow(benchmark::State& state) {
  // bipartite middle layer sized by the argument, unit arcs throughout
  int k = static_cast<int>(state.range(0));
  std::vector<std::pair<int, int>> arcs;
  int source = 0, sink = 2 * k + 1;
  for (int i = 0; i < k; ++i) {
    arcs.emplace_back(source, 1 + i);
    arcs.emplace_back(1 + k + i, sink);
    for (int j = 0; j < k; ++j)
      if ((i + j) % 3 != 0) arcs.emplace_back(1 + i, 1 + k + j);
  }
  relating::FlowNetwork net = relating::FlowNetwork::build(2 * k + 2, source, sink, arcs);
  for (auto _ : state) benchmark::DoNotOptimize(relating::max_flow(net).value);
}
BENCHMARK(BM_max_flow)->Arg(8)->Arg(32)->Arg(128);

void BM_reduce(benchmark::State& state) {
  int vars = static_cast<int>(state.range(0));
  relating::CnfFormula f = relating::random_cnf(vars, 2 * vars, 3, 11);
  for (auto _ : state)
    benchmark::DoNotOptimize(relating::reduce(f).graph.edge_count());
}
BENCHMARK(BM_reduce)->Arg(8)->Arg(32)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
