#include "relating/poly.hpp"

#include <algorithm>
#include <string>

namespace relating {

namespace {

std::string edge_name(int v, int u) {
  return "(" + std::to_string(v) + ", " + std::to_string(u) + ")";
}

}  // namespace

SideDecomposition decompose_side(const Graph& g, int v, int u) {
  if (!g.has_edge(v, u)) throw std::invalid_argument("decompose_side: vu is not an edge");

  SideDecomposition side;
  side.v = v;
  side.u = u;

  VertexSet second = n_i(g, VertexSet{u}, 2);
  for (int w : g.neighbors(v))
    if (second.contains(w)) side.m1.add(w);

  VertexSet closed;  // N[v] union N[u]
  closed.add(v);
  closed.add(u);
  for (int w : g.neighbors(v)) closed.add(w);
  for (int w : g.neighbors(u)) closed.add(w);

  for (int w1 : side.m1) {
    for (int w : g.neighbors(w1)) {
      if (closed.contains(w)) continue;
      auto [it, fresh] = side.attach.try_emplace(w, w1);
      if (!fresh && it->second != w1)
        throw ForbiddenCycleError("vertex " + std::to_string(w) +
                                  " has two neighbors in the first layer of side " +
                                  edge_name(v, u) + "; the graph contains a 4-cycle");
      side.m2.add(w);
    }
  }

  // Components of the subgraph induced by m2, by ascending smallest member.
  VertexSet remaining = side.m2;
  while (!remaining.empty()) {
    int start = remaining.members().front();
    VertexSet component{start};
    std::vector<int> stack{start};
    remaining.remove(start);
    while (!stack.empty()) {
      int w = stack.back();
      stack.pop_back();
      for (int nb : g.neighbors(w)) {
        if (!remaining.contains(nb)) continue;
        remaining.remove(nb);
        component.add(nb);
        stack.push_back(nb);
      }
    }
    if (component.size() > 2)
      throw ForbiddenCycleError("side " + edge_name(v, u) +
                                " has a second-layer component on " +
                                std::to_string(component.size()) +
                                " vertices; the graph contains a 4- or 6-cycle");
    side.components.push_back(std::move(component));
  }
  return side;
}

SideNetwork build_side_network(const Graph& g, const SideDecomposition& side) {
  const auto& m1 = side.m1.members();
  const auto& m2 = side.m2.members();
  int m1_base = 1;
  int m2_base = m1_base + static_cast<int>(m1.size());
  int comp_base = m2_base + static_cast<int>(m2.size());
  int sink = comp_base + static_cast<int>(side.components.size());
  int node_count = sink + 1;

  std::vector<int> node_of_vertex(g.vertex_count(), -1);
  for (std::size_t i = 0; i < m1.size(); ++i) node_of_vertex[m1[i]] = m1_base + static_cast<int>(i);
  for (std::size_t i = 0; i < m2.size(); ++i) node_of_vertex[m2[i]] = m2_base + static_cast<int>(i);
  std::vector<int> comp_of_vertex(g.vertex_count(), -1);
  for (std::size_t c = 0; c < side.components.size(); ++c)
    for (int w : side.components[c]) comp_of_vertex[w] = static_cast<int>(c);

  std::vector<std::pair<int, int>> arcs;
  for (std::size_t i = 0; i < m1.size(); ++i) arcs.emplace_back(0, m1_base + static_cast<int>(i));
  for (int w1 : m1)
    for (int w : g.neighbors(w1))
      if (side.m2.contains(w)) arcs.emplace_back(node_of_vertex[w1], node_of_vertex[w]);
  for (int w : m2) arcs.emplace_back(node_of_vertex[w], comp_base + comp_of_vertex[w]);
  for (std::size_t c = 0; c < side.components.size(); ++c)
    arcs.emplace_back(comp_base + static_cast<int>(c), sink);

  SideNetwork out;
  out.net = FlowNetwork::build(node_count, 0, sink, std::move(arcs));
  out.node_to_vertex.assign(node_count, -1);
  for (std::size_t i = 0; i < m1.size(); ++i) out.node_to_vertex[m1_base + i] = m1[i];
  for (std::size_t i = 0; i < m2.size(); ++i) out.node_to_vertex[m2_base + i] = m2[i];
  return out;
}

std::optional<VertexSet> side_dominating_set(const Graph& g, const SideDecomposition& side) {
  if (side.m1.empty()) return VertexSet{};

  SideNetwork net = build_side_network(g, side);
  FlowResult flow = max_flow(net.net);
  if (flow.value < static_cast<int>(side.m1.size())) return std::nullopt;

  // The chosen vertices are the second-layer nodes pushing flow onward to
  // their component node.
  int m2_base = 1 + static_cast<int>(side.m1.size());
  int comp_base = m2_base + static_cast<int>(side.m2.size());
  VertexSet chosen;
  for (std::size_t i = 0; i < net.net.arcs.size(); ++i) {
    auto [tail, head] = net.net.arcs[i];
    if (flow.arc_flow[i] == 1 && tail >= m2_base && tail < comp_base && head >= comp_base)
      chosen.add(net.node_to_vertex[tail]);
  }
  return chosen;
}

namespace {

// Each second layer behaves only when the graph has no 4- or 6-cycle:
// vertices shared by both layers touch nothing else in their union, and no
// edge joins the two exclusive parts. A violation certifies a forbidden
// cycle without naming it.
void check_second_layer_structure(const Graph& g, const SideDecomposition& sx,
                                  const SideDecomposition& sy) {
  VertexSet shared;
  for (int w : sx.m2)
    if (sy.m2.contains(w)) shared.add(w);
  VertexSet union_m2 = sx.m2.united(sy.m2);

  for (int w : union_m2) {
    for (int nb : g.neighbors(w)) {
      if (nb < w || !union_m2.contains(nb)) continue;
      bool bad;
      if (shared.contains(w) || shared.contains(nb)) {
        bad = true;  // shared vertices must be isolated inside the union
      } else {
        // both exclusive; edges across the two exclusive parts are impossible
        bad = sx.m2.contains(w) != sx.m2.contains(nb);
      }
      if (bad)
        throw ForbiddenCycleError(
            "edge (" + std::to_string(w) + ", " + std::to_string(nb) +
            ") joins the second layers of both sides; the graph contains a 4- or 6-cycle");
    }
  }
}

}  // namespace

PolyDecision is_relating_poly(const Graph& g, int x, int y, bool trust_cycle_free) {
  if (!g.has_edge(x, y)) throw std::invalid_argument("is_relating_poly: xy is not an edge");
  if (!trust_cycle_free) {
    if (has_cycle_of_length(g, 4)) throw NotC4C6FreeError("the graph contains a 4-cycle");
    if (has_cycle_of_length(g, 6)) throw NotC4C6FreeError("the graph contains a 6-cycle");
  }

  SideDecomposition sx = decompose_side(g, x, y);
  SideDecomposition sy = decompose_side(g, y, x);
  check_second_layer_structure(g, sx, sy);

  auto pick_x = side_dominating_set(g, sx);
  if (!pick_x) return {};
  auto pick_y = side_dominating_set(g, sy);
  if (!pick_y) return {};

  // Both layers are dominated; grow the union into a maximal independent
  // set of the graph minus N[x] and N[y]. Ascending vertex order keeps the
  // result reproducible.
  VertexSet closed{x, y};
  for (int w : g.neighbors(x)) closed.add(w);
  for (int w : g.neighbors(y)) closed.add(w);

  VertexSet s = pick_x->united(*pick_y);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (closed.contains(v) || s.contains(v)) continue;
    bool blocked = false;
    for (int nb : g.neighbors(v))
      if (s.contains(nb)) {
        blocked = true;
        break;
      }
    if (!blocked) s.add(v);
  }

  RelatingWitness witness{std::move(s)};
  if (!verify_relating_witness(g, x, y, witness))
    throw ForbiddenCycleError(
        "computed set fails the witness check; the graph cannot be free of 4- and 6-cycles");
  return {true, std::move(witness)};
}

}  // namespace relating
