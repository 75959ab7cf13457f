#pragma once

#include <algorithm>
#include <climits>
#include <cstdint>
#include <vector>

#include "relating/flow.hpp"
#include "relating/graph.hpp"

// Independently written reference implementations the suites check the
// library against. Everything here favors obviousness over speed.
namespace testsupport {

// All vertex pairs (u, v) with u < v in lexicographic order; bit i of an
// edge mask selects pairs[i].
inline std::vector<std::pair<int, int>> pair_universe(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  return pairs;
}

inline int pair_count(int n) { return n * (n - 1) / 2; }

inline relating::Graph graph_from_mask(int n, std::uint64_t mask) {
  auto pairs = pair_universe(n);
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if ((mask >> i) & 1) edges.push_back(pairs[i]);
  return relating::Graph::build(n, edges);
}

inline bool mask_connected(int n, std::uint64_t mask) {
  if (n <= 1) return true;
  auto pairs = pair_universe(n);
  std::vector<std::uint32_t> adj(n, 0);
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if ((mask >> i) & 1) {
      adj[pairs[i].first] |= std::uint32_t{1} << pairs[i].second;
      adj[pairs[i].second] |= std::uint32_t{1} << pairs[i].first;
    }
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (int v = 0; v < n; ++v)
      if ((frontier >> v) & 1) next |= adj[v];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (std::uint32_t{1} << n) - 1;
}

// Simple-cycle test by brute enumeration: every k-subset of vertices,
// every cyclic order of it (anchored at its smallest member), check that
// all k closing edges exist.
inline bool naive_has_cycle(const relating::Graph& g, int k) {
  int n = g.vertex_count();
  if (k > n) return false;
  std::vector<char> select(n, 0);
  std::fill(select.begin(), select.begin() + k, 1);
  do {
    int anchor = -1;
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
      if (select[v]) {
        if (anchor < 0) anchor = v;
        else rest.push_back(v);
      }
    do {
      bool ok = g.has_edge(anchor, rest.front());
      for (std::size_t i = 0; ok && i + 1 < rest.size(); ++i)
        ok = g.has_edge(rest[i], rest[i + 1]);
      if (ok && g.has_edge(rest.back(), anchor)) return true;
    } while (std::next_permutation(rest.begin(), rest.end()));
  } while (std::prev_permutation(select.begin(), select.end()));
  return false;
}

// Maximal independent sets as bitmasks, by filtering all 2^n subsets.
inline std::vector<std::uint32_t> naive_mis_masks(const relating::Graph& g) {
  int n = g.vertex_count();
  std::vector<std::uint32_t> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= std::uint32_t{1} << v;
    adj[v] |= std::uint32_t{1} << u;
  }
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
    bool independent = true;
    for (int v = 0; v < n && independent; ++v)
      if (((s >> v) & 1) && (adj[v] & s)) independent = false;
    if (!independent) continue;
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v)
      if (!((s >> v) & 1) && !(adj[v] & s)) maximal = false;
    if (maximal) out.push_back(s);
  }
  return out;
}

inline std::uint32_t set_to_mask(const relating::VertexSet& s) {
  std::uint32_t mask = 0;
  for (int v : s) mask |= std::uint32_t{1} << v;
  return mask;
}

// Minimum s-t cut by trying every node partition with source on the left
// and sink on the right.
inline int brute_min_cut(const relating::FlowNetwork& net) {
  int n = net.node_count;
  int best = INT_MAX;
  for (std::uint32_t side = 0; side < (std::uint32_t{1} << n); ++side) {
    if (!((side >> net.source) & 1) || ((side >> net.sink) & 1)) continue;
    int cut = 0;
    for (auto [u, v] : net.arcs)
      if (((side >> u) & 1) && !((side >> v) & 1)) ++cut;
    best = std::min(best, cut);
  }
  return best;
}

// Capacity bounds plus conservation at every interior node, and the value
// matching the source's net outflow.
inline bool flow_invariants_hold(const relating::FlowNetwork& net,
                                 const relating::FlowResult& r) {
  if (r.arc_flow.size() != net.arcs.size()) return false;
  std::vector<int> net_out(net.node_count, 0);
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    if (r.arc_flow[i] != 0 && r.arc_flow[i] != 1) return false;
    net_out[net.arcs[i].first] += r.arc_flow[i];
    net_out[net.arcs[i].second] -= r.arc_flow[i];
  }
  for (int v = 0; v < net.node_count; ++v) {
    if (v == net.source || v == net.sink) continue;
    if (net_out[v] != 0) return false;
  }
  return net_out[net.source] == r.value && net_out[net.sink] == -r.value;
}

}  // namespace testsupport
