#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "relating/graph.hpp"

namespace relating {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// DIMACS edge format: comment lines "c ...", one header "p edge <n> <m>",
// then exactly m lines "e <u> <v>" with 1-based endpoints. Vertices are
// shifted down by one internally.
Graph read_dimacs_graph(std::istream& in);
Graph read_dimacs_graph_file(const std::string& path);

// Canonical form: header, then edges as (min, max) pairs sorted ascending,
// written 1-based. Re-reading reproduces the graph exactly.
void write_dimacs_graph(std::ostream& out, const Graph& g);
std::string to_dimacs(const Graph& g);

}  // namespace relating
