#include "relating/reduction.hpp"

#include <ostream>

namespace relating {

int ReductionArtifact::require(const std::string& role) const {
  auto it = vertex_of.find(role);
  if (it == vertex_of.end()) throw std::out_of_range("no vertex with role '" + role + "'");
  return it->second;
}

ReductionArtifact reduce(const CnfFormula& f) {
  if (!is_normalized(f))
    throw std::invalid_argument("reduce: formula still has a tautological clause");

  int n = f.variable_count;
  int m = static_cast<int>(f.clauses.size());
  int occurrences = 0;
  for (const auto& clause : f.clauses) occurrences += static_cast<int>(clause.size());

  ReductionArtifact art;
  auto place = [&art](const std::string& role) {
    int id = static_cast<int>(art.roles.size());
    art.roles.push_back(role);
    art.vertex_of.emplace(role, id);
    return id;
  };

  art.x = place("x");
  art.y = place("y");
  std::vector<int> xi(n), ti(n), fi(n);
  for (int i = 1; i <= n; ++i) {
    xi[i - 1] = place("x" + std::to_string(i));
    ti[i - 1] = place("t" + std::to_string(i));
    fi[i - 1] = place("f" + std::to_string(i));
  }
  std::vector<int> cj(m);
  for (int j = 1; j <= m; ++j) cj[j - 1] = place("c" + std::to_string(j));

  std::vector<std::pair<int, int>> edges;
  edges.emplace_back(art.x, art.y);
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(art.y, xi[i]);
    edges.emplace_back(xi[i], ti[i]);
    edges.emplace_back(xi[i], fi[i]);
    edges.emplace_back(ti[i], fi[i]);
  }
  for (int j = 1; j <= m; ++j) {
    // One vertex per literal occurrence, tied to the clause and to the
    // opposite branch of its variable triangle.
    for (const auto& l : f.clauses[j - 1]) {
      std::string role = (l.positive ? "t" : "f") + std::to_string(l.variable) + "," +
                         std::to_string(j);
      int o = place(role);
      edges.emplace_back(o, cj[j - 1]);
      edges.emplace_back(l.positive ? fi[l.variable - 1] : ti[l.variable - 1], o);
    }
    edges.emplace_back(art.x, cj[j - 1]);
  }

  art.graph = Graph::build(static_cast<int>(art.roles.size()), edges);

  // The construction is rigid enough to recount: 2 + 3n + m + L vertices
  // and 1 + 4n + 2L + m edges, and no cycle of length four or five.
  if (art.graph.vertex_count() != 2 + 3 * n + m + occurrences)
    throw std::logic_error("reduction produced a wrong vertex count");
  if (art.graph.edge_count() != 1 + 4 * n + 2 * occurrences + m)
    throw std::logic_error("reduction produced a wrong edge count");
  if (has_cycle_of_length(art.graph, 4))
    throw std::logic_error("reduction produced a 4-cycle");
  if (has_cycle_of_length(art.graph, 5))
    throw std::logic_error("reduction produced a 5-cycle");
  return art;
}

RelatingWitness assignment_to_witness(const ReductionArtifact& art, const Assignment& a) {
  RelatingWitness w;
  for (std::size_t id = 0; id < art.roles.size(); ++id) {
    const std::string& role = art.roles[id];
    if (role.size() < 2 || (role[0] != 't' && role[0] != 'f')) continue;
    bool wants_true = role[0] == 't';
    int variable = 0;
    try {
      variable = std::stoi(role.substr(1));
    } catch (const std::exception&) {
      continue;  // "x", "y", "xi", "cj"
    }
    if (variable < 1 || variable > static_cast<int>(a.size()))
      throw std::invalid_argument("assignment does not cover variable " +
                                  std::to_string(variable));
    // Branch and occurrence vertices of variable i follow its value.
    if (a[variable - 1] == wants_true) w.s.add(static_cast<int>(id));
  }
  return w;
}

Assignment witness_to_assignment(const ReductionArtifact& art, const RelatingWitness& w) {
  if (!verify_relating_witness(art.graph, art.x, art.y, w))
    throw std::invalid_argument("not a valid witness for the reduction's query edge");
  int n = 0;
  while (art.vertex_of.count("x" + std::to_string(n + 1))) ++n;
  Assignment a(n);
  for (int i = 1; i <= n; ++i) a[i - 1] = w.s.contains(art.require("t" + std::to_string(i)));
  return a;
}

void write_labels(std::ostream& out, const ReductionArtifact& art) {
  for (std::size_t id = 0; id < art.roles.size(); ++id)
    out << id + 1 << ' ' << art.roles[id] << '\n';
  out << "query " << art.x + 1 << ' ' << art.y + 1 << '\n';
}

}  // namespace relating
