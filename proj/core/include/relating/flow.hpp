#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

namespace relating {

// Directed unit-capacity network. Arcs keep their construction order; that
// order is the public identity used by FlowResult::arc_flow.
struct FlowNetwork {
  int node_count = 0;
  int source = 0;
  int sink = 0;
  std::vector<std::pair<int, int>> arcs;

  // Rejects out-of-range endpoints, self-arcs, duplicate arcs, arcs into
  // the source or out of the sink, and source == sink.
  static FlowNetwork build(int node_count, int source, int sink,
                           std::vector<std::pair<int, int>> arcs);
};

struct FlowResult {
  int value = 0;
  std::vector<int> arc_flow;  // 0 or 1 per arc, in arc-list order
};

// Maximum s-t flow by shortest augmenting paths. Ties between equal-length
// paths break toward the smaller head node, so results are reproducible
// across runs and platforms.
FlowResult max_flow(const FlowNetwork& net);

// One line per arc: "arc <u> <v> flow <0|1>", in arc-list order.
void dump_flow(std::ostream& out, const FlowNetwork& net, const FlowResult& result);

}  // namespace relating
