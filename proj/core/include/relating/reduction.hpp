#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "relating/cnf.hpp"
#include "relating/graph.hpp"
#include "relating/oracle.hpp"

namespace relating {

// Output of the formula-to-graph reduction: a graph with a distinguished
// edge xy that is relating exactly when the formula is satisfiable.
//
// Roles name the construction gadget of each vertex: "x", "y", "xi", "ti",
// "fi" (i = variable index), "cj" (j = clause index), "ti,j" / "fi,j"
// (occurrence of variable i in clause j, positive / negated).
struct ReductionArtifact {
  Graph graph;
  int x = 0;
  int y = 0;
  std::vector<std::string> roles;        // per vertex
  std::map<std::string, int> vertex_of;  // inverse of roles

  // Vertex for a role; throws std::out_of_range when absent.
  int require(const std::string& role) const;
};

// Builds the reduction graph for a normalized formula. For n variables,
// m clauses and L literal occurrences the result has 2 + 3n + m + L
// vertices and 1 + 4n + 2L + m edges; both counts and the absence of
// four- and five-cycles are asserted before returning.
//
// Throws std::invalid_argument when f still contains a tautological clause.
ReductionArtifact reduce(const CnfFormula& f);

// Witness for the artifact's xy edge encoding the given assignment: the
// satisfied branch vertex of every variable triangle plus the occurrence
// vertices its value makes true.
RelatingWitness assignment_to_witness(const ReductionArtifact& art, const Assignment& a);

// Reads an assignment back out of a witness: variable i is true when ti is
// in the set. Verifies the witness first; throws std::invalid_argument when
// it is not a valid witness for the artifact's edge.
Assignment witness_to_assignment(const ReductionArtifact& art, const RelatingWitness& w);

// One "<vertex> <role>" line per vertex (1-based ids), then
// "query <x> <y>".
void write_labels(std::ostream& out, const ReductionArtifact& art);

}  // namespace relating
