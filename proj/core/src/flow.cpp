#include "relating/flow.hpp"

#include <algorithm>
#include <deque>
#include <ostream>
#include <set>
#include <stdexcept>

namespace relating {

FlowNetwork FlowNetwork::build(int node_count, int source, int sink,
                               std::vector<std::pair<int, int>> arcs) {
  if (node_count < 2) throw std::invalid_argument("network needs at least two nodes");
  if (source < 0 || source >= node_count || sink < 0 || sink >= node_count)
    throw std::invalid_argument("source or sink out of range");
  if (source == sink) throw std::invalid_argument("source equals sink");
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : arcs) {
    if (u < 0 || u >= node_count || v < 0 || v >= node_count)
      throw std::invalid_argument("arc endpoint out of range");
    if (u == v) throw std::invalid_argument("self-arc");
    if (v == source) throw std::invalid_argument("arc into the source");
    if (u == sink) throw std::invalid_argument("arc out of the sink");
    if (!seen.insert({u, v}).second) throw std::invalid_argument("duplicate arc");
  }
  return FlowNetwork{node_count, source, sink, std::move(arcs)};
}

namespace {

struct ResidualArc {
  int head;
  int capacity;  // 0 or 1
  int partner;   // index of the reverse arc in adjacency[head]
  int arc_index; // original arc index, -1 for reverse arcs
};

}  // namespace

FlowResult max_flow(const FlowNetwork& net) {
  std::vector<std::vector<ResidualArc>> adjacency(net.node_count);
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    auto [u, v] = net.arcs[i];
    int fwd = static_cast<int>(adjacency[u].size());
    int rev = static_cast<int>(adjacency[v].size());
    adjacency[u].push_back({v, 1, rev, static_cast<int>(i)});
    adjacency[v].push_back({u, 0, fwd, -1});
  }
  // Deterministic augmenting order: scan each node's arcs by ascending head.
  std::vector<std::vector<int>> order(net.node_count);
  for (int u = 0; u < net.node_count; ++u) {
    auto& idx = order[u];
    idx.resize(adjacency[u].size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
      return adjacency[u][a].head < adjacency[u][b].head;
    });
  }

  int value = 0;
  std::vector<std::pair<int, int>> via(net.node_count);  // (node, arc slot) on the path
  for (;;) {
    std::vector<char> seen(net.node_count, 0);
    seen[net.source] = 1;
    std::deque<int> queue{net.source};
    bool reached = false;
    while (!queue.empty() && !reached) {
      int u = queue.front();
      queue.pop_front();
      for (int slot : order[u]) {
        const auto& arc = adjacency[u][slot];
        if (arc.capacity == 0 || seen[arc.head]) continue;
        seen[arc.head] = 1;
        via[arc.head] = {u, slot};
        if (arc.head == net.sink) {
          reached = true;
          break;
        }
        queue.push_back(arc.head);
      }
    }
    if (!reached) break;
    for (int v = net.sink; v != net.source;) {
      auto [u, slot] = via[v];
      auto& arc = adjacency[u][slot];
      arc.capacity -= 1;
      adjacency[v][arc.partner].capacity += 1;
      v = u;
    }
    ++value;
  }

  FlowResult result;
  result.value = value;
  result.arc_flow.assign(net.arcs.size(), 0);
  for (int u = 0; u < net.node_count; ++u)
    for (const auto& arc : adjacency[u])
      if (arc.arc_index >= 0 && arc.capacity == 0) result.arc_flow[arc.arc_index] = 1;
  return result;
}

void dump_flow(std::ostream& out, const FlowNetwork& net, const FlowResult& result) {
  for (std::size_t i = 0; i < net.arcs.size(); ++i)
    out << "arc " << net.arcs[i].first << ' ' << net.arcs[i].second << " flow "
        << result.arc_flow[i] << '\n';
}

}  // namespace relating
