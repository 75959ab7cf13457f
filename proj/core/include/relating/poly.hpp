#pragma once

#include <map>
#include <optional>
#include <vector>

#include "relating/flow.hpp"
#include "relating/graph.hpp"
#include "relating/oracle.hpp"

namespace relating {

// The per-side structures for edge vu. m1 holds the neighbors of v that are
// at distance two from u; m2 holds the neighbors of m1 outside N[v] and
// N[u]. In a C4-free graph each m2 vertex has exactly one m1 neighbor
// (attach), and in a C4/C6-free graph the components of the subgraph
// induced by m2 have at most two vertices.
struct SideDecomposition {
  int v = 0;
  int u = 0;
  VertexSet m1;
  VertexSet m2;
  std::vector<VertexSet> components;  // of the subgraph induced by m2
  std::map<int, int> attach;          // m2 vertex -> its unique m1 neighbor
};

// Throws ForbiddenCycleError when the input contradicts C4/C6-freeness
// (an m2 vertex with two m1 neighbors, or an m2 component on three or
// more vertices).
SideDecomposition decompose_side(const Graph& g, int v, int u);

// Flow network for one side: source -> each m1 vertex, the m1-m2 edges of
// g, each m2 vertex -> a node for its component, each component node ->
// sink. All capacities one. Flow |m1| is achievable exactly when some
// independent subset of m2 dominates m1.
struct SideNetwork {
  FlowNetwork net;
  std::vector<int> node_to_vertex;  // graph vertex per node; -1 for s, t, a_i
};

SideNetwork build_side_network(const Graph& g, const SideDecomposition& side);

// Independent subset of m2 dominating all of m1, or nullopt when none
// exists. The empty set is returned when m1 is empty.
std::optional<VertexSet> side_dominating_set(const Graph& g, const SideDecomposition& side);

struct PolyDecision {
  bool relating = false;
  std::optional<RelatingWitness> witness;
};

// Polynomial decision for graphs without cycles of length four or six.
// Unless trust_cycle_free is set, the precondition is checked up front and
// NotC4C6FreeError raised on violation. Structural impossibilities that a
// forbidden cycle would cause are detected during the run either way and
// reported as ForbiddenCycleError.
PolyDecision is_relating_poly(const Graph& g, int x, int y, bool trust_cycle_free = false);

}  // namespace relating
