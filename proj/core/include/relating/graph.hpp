#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace relating {

// A computation discovered a forbidden short cycle in a graph that was
// promised to be free of it.
struct ForbiddenCycleError : std::runtime_error {
  explicit ForbiddenCycleError(const std::string& what) : std::runtime_error(what) {}
};

// The polynomial decision refused a graph that fails its C4/C6-freeness
// precondition.
struct NotC4C6FreeError : std::runtime_error {
  explicit NotC4C6FreeError(const std::string& what) : std::runtime_error(what) {}
};

// Duplicate-free set of vertex identifiers, kept sorted ascending.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<int> members);
  explicit VertexSet(std::vector<int> members);

  bool contains(int v) const;
  void add(int v);     // no-op when already present
  void remove(int v);  // no-op when absent

  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }
  const std::vector<int>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  VertexSet united(const VertexSet& other) const;
  VertexSet with(int v) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<int> members_;
};

// Immutable simple undirected graph over vertices [0, vertex_count).
class Graph {
 public:
  Graph() = default;

  // Rejects self-loops, endpoints outside [0, vertex_count) and duplicate
  // edges. Edge list order is irrelevant.
  static Graph build(int vertex_count, std::span<const std::pair<int, int>> edges);
  static Graph build(int vertex_count, std::initializer_list<std::pair<int, int>> edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int degree(int v) const;
  std::span<const int> neighbors(int v) const;
  bool has_edge(int u, int v) const;

  // Canonical edge list: (min, max) pairs sorted ascending.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

 private:
  int vertex_count_ = 0;
  std::vector<std::vector<int>> adjacency_;  // sorted neighbor lists
  std::vector<std::pair<int, int>> edges_;
};

VertexSet all_vertices(const Graph& g);

// Minimum edge-count distance from the nearest source, per vertex; nullopt
// marks unreachable vertices. Sources must be nonempty.
std::vector<std::optional<int>> distance_layers(const Graph& g, const VertexSet& sources);

// Vertices at distance exactly i from `sources`.
VertexSet n_i(const Graph& g, const VertexSet& sources, int i);

// No edge of g joins two members of s. The empty set is independent.
bool is_independent(const Graph& g, const VertexSet& s);

// Every vertex of t lies in s or has a neighbor in s. The empty s dominates
// only the empty t.
bool dominates(const Graph& g, const VertexSet& s, const VertexSet& t);

bool is_maximal_independent(const Graph& g, const VertexSet& s);

// Exact test for a simple cycle on exactly k vertices, k in {3,4,5,6}.
// Brute force with early exit; k=5 and k=6 cost O(n * max_degree^(k-1))
// in the worst case.
bool has_cycle_of_length(const Graph& g, int k);

// Copy of g without the edge uv; throws when uv is not an edge.
Graph delete_edge(const Graph& g, int u, int v);

// Subgraph induced by `keep`, plus the original identifier of each
// subgraph vertex (subgraph vertex i came from mapping[i]).
std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const VertexSet& keep);

}  // namespace relating
