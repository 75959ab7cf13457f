#include <doctest.h>

#include <random>
#include <sstream>

#include "relating/dimacs.hpp"
#include "relating/graph.hpp"
#include "support/helpers.hpp"

using namespace relating;

namespace {

Graph path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::build(n, edges);
}

Graph cycle(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(n - 1, 0);
  return Graph::build(n, edges);
}

}  // namespace

TEST_CASE("vertex set keeps members sorted and unique") {
  VertexSet s{3, 1, 3, 2};
  CHECK(s.members() == std::vector<int>{1, 2, 3});
  CHECK(s.contains(2));
  CHECK_FALSE(s.contains(4));

  s.add(0);
  s.add(2);  // already present
  CHECK(s.members() == std::vector<int>{0, 1, 2, 3});
  s.remove(1);
  s.remove(7);  // absent
  CHECK(s.members() == std::vector<int>{0, 2, 3});

  CHECK(VertexSet{1, 2}.united(VertexSet{2, 5}) == VertexSet{1, 2, 5});
  CHECK(VertexSet{1}.with(0) == VertexSet{0, 1});
  CHECK(VertexSet{}.empty());
}

TEST_CASE("graph construction rejects malformed edge lists") {
  CHECK_THROWS_AS(Graph::build(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::build(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::build(3, {{-1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::build(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::build(-1, {}), std::invalid_argument);
}

TEST_CASE("graph accessors") {
  Graph g = Graph::build(4, {{2, 1}, {0, 1}, {1, 3}});
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.degree(1) == 3);
  CHECK(g.degree(0) == 1);
  CHECK(g.has_edge(1, 2));
  CHECK(g.has_edge(2, 1));
  CHECK_FALSE(g.has_edge(0, 3));
  CHECK(std::vector<int>(g.neighbors(1).begin(), g.neighbors(1).end()) ==
        std::vector<int>{0, 2, 3});
  // canonical order: (min, max), ascending
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {1, 3}});
  CHECK_THROWS_AS(g.degree(4), std::out_of_range);
  CHECK_THROWS_AS(g.has_edge(0, 9), std::out_of_range);
}

TEST_CASE("distance layers") {
  Graph c5 = cycle(5);
  auto dist = distance_layers(c5, VertexSet{0});
  REQUIRE(dist.size() == 5);
  CHECK(*dist[0] == 0);
  CHECK(*dist[1] == 1);
  CHECK(*dist[2] == 2);
  CHECK(*dist[3] == 2);
  CHECK(*dist[4] == 1);

  Graph split = Graph::build(4, {{0, 1}});  // vertices 2, 3 unreachable
  auto d2 = distance_layers(split, VertexSet{0});
  CHECK(d2[1].has_value());
  CHECK_FALSE(d2[2].has_value());
  CHECK_FALSE(d2[3].has_value());

  CHECK_THROWS_AS(distance_layers(c5, VertexSet{}), std::invalid_argument);
  CHECK_THROWS_AS(distance_layers(c5, VertexSet{9}), std::out_of_range);
}

TEST_CASE("distance layer slices") {
  CHECK(n_i(cycle(5), VertexSet{0}, 2) == VertexSet{2, 3});
  CHECK(n_i(path(3), VertexSet{1}, 1) == VertexSet{0, 2});
  CHECK(n_i(path(3), VertexSet{0}, 3) == VertexSet{});
  CHECK(n_i(path(3), VertexSet{1}, 0) == VertexSet{1});
}

TEST_CASE("layer slices partition the reachable vertices") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 30; ++round) {
    int n = 8;
    Graph g = testsupport::graph_from_mask(n, rng() & ((1u << testsupport::pair_count(n)) - 1));
    VertexSet sources{static_cast<int>(rng() % n)};
    auto dist = distance_layers(g, sources);
    CHECK(n_i(g, sources, 0) == sources);
    std::size_t covered = 0;
    for (int layer = 0; layer < n; ++layer) covered += n_i(g, sources, layer).size();
    std::size_t reachable = 0;
    for (int v = 0; v < n; ++v)
      if (dist[v]) ++reachable;
    CHECK(covered == reachable);
  }
}

TEST_CASE("single-source distances are symmetric") {
  std::mt19937_64 rng(12);
  for (int round = 0; round < 20; ++round) {
    int n = 7;
    Graph g = testsupport::graph_from_mask(n, rng() & ((1u << testsupport::pair_count(n)) - 1));
    for (int u = 0; u < n; ++u) {
      auto from_u = distance_layers(g, VertexSet{u});
      for (int v = 0; v < n; ++v) {
        auto from_v = distance_layers(g, VertexSet{v});
        CHECK(from_u[v] == from_v[u]);
      }
    }
  }
}

TEST_CASE("independence and domination") {
  Graph p3 = path(3);
  CHECK(is_independent(p3, VertexSet{0, 2}));
  CHECK_FALSE(is_independent(p3, VertexSet{0, 1}));
  CHECK(is_independent(p3, VertexSet{}));

  CHECK(dominates(p3, VertexSet{1}, all_vertices(p3)));
  CHECK_FALSE(dominates(p3, VertexSet{0}, VertexSet{2}));
  CHECK(dominates(p3, VertexSet{}, VertexSet{}));
  CHECK_FALSE(dominates(p3, VertexSet{}, VertexSet{0}));
}

TEST_CASE("maximal independence") {
  Graph p3 = path(3);
  CHECK(is_maximal_independent(p3, VertexSet{0, 2}));
  CHECK_FALSE(is_maximal_independent(p3, VertexSet{0}));
  CHECK(is_maximal_independent(cycle(5), VertexSet{0, 2}));
}

// Maximality via domination must match the direct reading: independent and
// no vertex can join. Exhaustive on small orders, sampled at order 7.
TEST_CASE("maximal independence agrees with the extension formulation") {
  auto check_graph = [](const Graph& g) {
    int n = g.vertex_count();
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
      std::vector<int> ids;
      for (int v = 0; v < n; ++v)
        if ((mask >> v) & 1) ids.push_back(v);
      VertexSet s(ids);
      bool by_extension = is_independent(g, s);
      if (by_extension) {
        for (int v = 0; v < n && by_extension; ++v) {
          if (s.contains(v)) continue;
          if (is_independent(g, s.with(v))) by_extension = false;
        }
      }
      if (is_maximal_independent(g, s) != by_extension) {
        CAPTURE(n);
        CAPTURE(mask);
        REQUIRE(is_maximal_independent(g, s) == by_extension);
      }
    }
  };

  for (int n = 0; n <= 6; ++n)
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << testsupport::pair_count(n)); ++mask)
      check_graph(testsupport::graph_from_mask(n, mask));

  std::mt19937_64 rng(21);
  for (int round = 0; round < 400; ++round)
    check_graph(testsupport::graph_from_mask(
        7, rng() & ((std::uint64_t{1} << testsupport::pair_count(7)) - 1)));
}

TEST_CASE("fixed-length cycle detection on named graphs") {
  CHECK(has_cycle_of_length(cycle(4), 4));
  CHECK_FALSE(has_cycle_of_length(cycle(4), 5));
  CHECK_FALSE(has_cycle_of_length(cycle(5), 4));
  CHECK(has_cycle_of_length(cycle(5), 5));
  CHECK(has_cycle_of_length(cycle(6), 6));
  CHECK_FALSE(has_cycle_of_length(cycle(6), 4));
  CHECK(has_cycle_of_length(cycle(3), 3));
  CHECK_FALSE(has_cycle_of_length(path(6), 3));

  CHECK_THROWS_AS(has_cycle_of_length(path(3), 2), std::invalid_argument);
  CHECK_THROWS_AS(has_cycle_of_length(path(3), 7), std::invalid_argument);
}

TEST_CASE("cycle detection agrees with subset-permutation enumeration") {
  auto check_graph = [](const Graph& g) {
    for (int k = 3; k <= 6; ++k) {
      if (has_cycle_of_length(g, k) != testsupport::naive_has_cycle(g, k)) {
        CAPTURE(k);
        REQUIRE(has_cycle_of_length(g, k) == testsupport::naive_has_cycle(g, k));
      }
    }
  };

  for (int n = 0; n <= 6; ++n)
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << testsupport::pair_count(n)); ++mask)
      check_graph(testsupport::graph_from_mask(n, mask));

  std::mt19937_64 rng(22);
  for (int round = 0; round < 300; ++round)
    check_graph(testsupport::graph_from_mask(
        7, rng() & ((std::uint64_t{1} << testsupport::pair_count(7)) - 1)));
}

TEST_CASE("edge deletion") {
  Graph p3 = path(3);
  Graph cut = delete_edge(p3, 0, 1);
  CHECK(cut.edges() == std::vector<std::pair<int, int>>{{1, 2}});
  CHECK(p3.edge_count() == 2);  // original untouched

  Graph k2 = Graph::build(2, {{0, 1}});
  CHECK(delete_edge(k2, 1, 0).edge_count() == 0);

  CHECK_THROWS_AS(delete_edge(p3, 0, 2), std::invalid_argument);
}

TEST_CASE("induced subgraphs renumber and report the mapping") {
  Graph c5 = cycle(5);
  auto [sub, mapping] = induced_subgraph(c5, VertexSet{1, 2, 4});
  CHECK(mapping == std::vector<int>{1, 2, 4});
  CHECK(sub.vertex_count() == 3);
  CHECK(sub.edges() == std::vector<std::pair<int, int>>{{0, 1}});  // edge 1-2 survives

  auto [empty_sub, empty_map] = induced_subgraph(c5, VertexSet{});
  CHECK(empty_sub.vertex_count() == 0);
  CHECK(empty_map.empty());

  CHECK_THROWS_AS(induced_subgraph(c5, VertexSet{7}), std::out_of_range);
}

TEST_CASE("graph files render to canonical bytes") {
  CHECK(to_dimacs(cycle(5)) == "p edge 5 5\ne 1 2\ne 1 5\ne 2 3\ne 3 4\ne 4 5\n");
  CHECK(to_dimacs(Graph::build(3, {})) == "p edge 3 0\n");
}

TEST_CASE("graph files round-trip") {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 50; ++round) {
    int n = static_cast<int>(rng() % 9);
    Graph g = testsupport::graph_from_mask(
        n, rng() & ((std::uint64_t{1} << testsupport::pair_count(n)) - 1));
    std::istringstream in(to_dimacs(g));
    Graph back = read_dimacs_graph(in);
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.edges() == g.edges());
  }
}

TEST_CASE("graph files honor comments and reject malformed input") {
  std::istringstream ok("c a comment\np edge 3 1\nc another\ne 1 3\n");
  Graph g = read_dimacs_graph(ok);
  CHECK(g.vertex_count() == 3);
  CHECK(g.has_edge(0, 2));

  auto reject = [](const std::string& text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(read_dimacs_graph(in), ParseError);
  };
  reject("");                                     // no header
  reject("e 1 2\n");                              // edge before header
  reject("p edge 2 1\n");                         // promised edge missing
  reject("p edge 2 0\ne 1 2\n");                  // extra edge
  reject("p edge 2 1\ne 1 3\n");                  // endpoint out of range
  reject("p edge 2 1\ne 0 1\n");                  // ids are 1-based
  reject("p edge 2 2\ne 1 2\ne 2 1\n");           // duplicate edge
  reject("p edge 2 1\ne 1 1\n");                  // self-loop
  reject("p edge 2 1\np edge 2 1\ne 1 2\n");      // second header
  reject("p graph 2 1\ne 1 2\n");                 // wrong format tag
  reject("p edge 2 1\nq 1 2\n");                  // unknown record
  reject("p edge -1 0\n");                        // negative count
  reject("p edge 2 1\ne 1 2 3\n");                // too many fields
}
