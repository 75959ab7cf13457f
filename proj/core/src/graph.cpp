#include "relating/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace relating {

VertexSet::VertexSet(std::initializer_list<int> members)
    : VertexSet(std::vector<int>(members)) {}

VertexSet::VertexSet(std::vector<int> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(int v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

void VertexSet::add(int v) {
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it == members_.end() || *it != v) members_.insert(it, v);
}

void VertexSet::remove(int v) {
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it != members_.end() && *it == v) members_.erase(it);
}

VertexSet VertexSet::united(const VertexSet& other) const {
  std::vector<int> merged;
  merged.reserve(members_.size() + other.members_.size());
  std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                 other.members_.end(), std::back_inserter(merged));
  VertexSet result;
  result.members_ = std::move(merged);
  return result;
}

VertexSet VertexSet::with(int v) const {
  VertexSet result = *this;
  result.add(v);
  return result;
}

Graph Graph::build(int vertex_count, std::span<const std::pair<int, int>> edges) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  Graph g;
  g.vertex_count_ = vertex_count;
  g.adjacency_.resize(vertex_count);

  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
      throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                  ", " + std::to_string(v) + ")");
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    std::pair<int, int> key = std::minmax(u, v);
    if (!seen.insert(key).second)
      throw std::invalid_argument("duplicate edge (" + std::to_string(key.first) + ", " +
                                  std::to_string(key.second) + ")");
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (auto& list : g.adjacency_) std::sort(list.begin(), list.end());
  g.edges_.assign(seen.begin(), seen.end());
  return g;
}

Graph Graph::build(int vertex_count, std::initializer_list<std::pair<int, int>> edges) {
  return build(vertex_count, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

int Graph::degree(int v) const {
  if (v < 0 || v >= vertex_count_) throw std::out_of_range("vertex out of range");
  return static_cast<int>(adjacency_[v].size());
}

std::span<const int> Graph::neighbors(int v) const {
  if (v < 0 || v >= vertex_count_) throw std::out_of_range("vertex out of range");
  return adjacency_[v];
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || u >= vertex_count_ || v < 0 || v >= vertex_count_)
    throw std::out_of_range("vertex out of range");
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

VertexSet all_vertices(const Graph& g) {
  std::vector<int> ids(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) ids[v] = v;
  return VertexSet(std::move(ids));
}

std::vector<std::optional<int>> distance_layers(const Graph& g, const VertexSet& sources) {
  if (sources.empty()) throw std::invalid_argument("distance_layers: empty source set");
  std::vector<std::optional<int>> dist(g.vertex_count());
  std::deque<int> queue;
  for (int s : sources) {
    if (s < 0 || s >= g.vertex_count()) throw std::out_of_range("source out of range");
    dist[s] = 0;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(v)) {
      if (!dist[w]) {
        dist[w] = *dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

VertexSet n_i(const Graph& g, const VertexSet& sources, int i) {
  auto dist = distance_layers(g, sources);
  std::vector<int> layer;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (dist[v] && *dist[v] == i) layer.push_back(v);
  return VertexSet(std::move(layer));
}

bool is_independent(const Graph& g, const VertexSet& s) {
  const auto& m = s.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (g.has_edge(m[i], m[j])) return false;
  return true;
}

bool dominates(const Graph& g, const VertexSet& s, const VertexSet& t) {
  for (int v : t) {
    if (s.contains(v)) continue;
    bool hit = false;
    for (int w : g.neighbors(v))
      if (s.contains(w)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

bool is_maximal_independent(const Graph& g, const VertexSet& s) {
  return is_independent(g, s) && dominates(g, s, all_vertices(g));
}

namespace {

// Simple path search: extends a path one vertex at a time and closes it
// back to `start` once it has k vertices. Forcing every interior vertex
// above `start` counts each cycle once per direction, which is fine for a
// boolean answer.
bool cycle_through(const Graph& g, int start, int k, std::vector<int>& path,
                   std::vector<char>& on_path) {
  int last = path.back();
  if (static_cast<int>(path.size()) == k) return g.has_edge(last, start);
  for (int w : g.neighbors(last)) {
    if (w <= start || on_path[w]) continue;
    on_path[w] = 1;
    path.push_back(w);
    if (cycle_through(g, start, k, path, on_path)) return true;
    path.pop_back();
    on_path[w] = 0;
  }
  return false;
}

}  // namespace

bool has_cycle_of_length(const Graph& g, int k) {
  if (k < 3 || k > 6) throw std::invalid_argument("cycle length must be 3..6");

  if (k == 3) {
    for (auto [u, v] : g.edges()) {
      // sorted lists: common neighbor = nonempty intersection
      auto nu = g.neighbors(u);
      auto nv = g.neighbors(v);
      std::size_t i = 0, j = 0;
      while (i < nu.size() && j < nv.size()) {
        if (nu[i] == nv[j]) return true;
        if (nu[i] < nv[j]) ++i;
        else ++j;
      }
    }
    return false;
  }

  if (k == 4) {
    // A C4 exists exactly when two vertices share two common neighbors.
    std::set<std::pair<int, int>> seen;
    for (int mid = 0; mid < g.vertex_count(); ++mid) {
      auto nb = g.neighbors(mid);
      for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
          if (!seen.insert({nb[i], nb[j]}).second) return true;
    }
    return false;
  }

  std::vector<char> on_path(g.vertex_count(), 0);
  std::vector<int> path;
  for (int start = 0; start < g.vertex_count(); ++start) {
    path.assign(1, start);
    on_path.assign(g.vertex_count(), 0);
    on_path[start] = 1;
    if (cycle_through(g, start, k, path, on_path)) return true;
  }
  return false;
}

Graph delete_edge(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v)) throw std::invalid_argument("delete_edge: not an edge");
  std::pair<int, int> key = std::minmax(u, v);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edges().size() - 1);
  for (auto e : g.edges())
    if (e != key) edges.push_back(e);
  return Graph::build(g.vertex_count(), edges);
}

std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<int> mapping(keep.members());
  std::vector<int> index(g.vertex_count(), -1);
  for (std::size_t i = 0; i < mapping.size(); ++i) {
    int v = mapping[i];
    if (v < 0 || v >= g.vertex_count()) throw std::out_of_range("vertex out of range");
    index[v] = static_cast<int>(i);
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges())
    if (index[u] >= 0 && index[v] >= 0) edges.emplace_back(index[u], index[v]);
  return {Graph::build(static_cast<int>(mapping.size()), edges), std::move(mapping)};
}

}  // namespace relating
