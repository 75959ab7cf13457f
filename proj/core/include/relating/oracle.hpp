#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "relating/graph.hpp"

namespace relating {

// Certificate that edge xy is relating: s is independent, avoids x and y,
// and both s + x and s + y are maximal independent sets.
struct RelatingWitness {
  VertexSet s;

  friend bool operator==(const RelatingWitness&, const RelatingWitness&) = default;
};

// Checks the witness definition directly against g.
bool verify_relating_witness(const Graph& g, int x, int y, const RelatingWitness& w);

// "witness <k> : <v1> ... <vk>" with 1-based vertices, or "witness none".
std::string format_witness(const std::optional<RelatingWitness>& w);
std::optional<RelatingWitness> parse_witness(const std::string& line);

// Visits every maximal independent set of g once; the visitor returns false
// to stop early. Returns true when the enumeration ran to completion.
// Requires vertex_count <= 64 (bitmask representation).
bool for_each_maximal_independent_set(const Graph& g,
                                      const std::function<bool(const VertexSet&)>& visit);

struct MisEnumeration {
  std::vector<VertexSet> sets;
  bool truncated = false;  // cap was hit; `sets` holds the first `cap` found
};

MisEnumeration enumerate_maximal_independent_sets(const Graph& g,
                                                  std::optional<std::size_t> cap = {});

int independence_number(const Graph& g);

// Every maximal independent set has the same size.
bool is_well_covered(const Graph& g);

struct BruteDecision {
  std::optional<RelatingWitness> witness;
  bool truncated = false;  // gave up before the candidate space was exhausted

  bool relating() const { return witness.has_value(); }
};

// Reference decision by exhaustive search: enumerates maximal independent
// sets of g restricted to vertices outside N[x] and N[y] and checks each as
// a witness. With a cap, at most `cap` candidates are examined; truncated
// is set when the cap cut the search short of an answer.
BruteDecision is_relating_brute(const Graph& g, int x, int y,
                                std::optional<std::size_t> cap = {});

}  // namespace relating
