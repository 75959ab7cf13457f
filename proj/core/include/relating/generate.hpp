#pragma once

#include <cstdint>
#include <vector>

#include "relating/cnf.hpp"
#include "relating/graph.hpp"

namespace relating {

// Erdos-Renyi graph: each of the n*(n-1)/2 possible edges is present with
// probability p. Same seed, same graph, on every platform.
Graph random_graph(int n, double p, std::uint64_t seed);

// Draws random_graph samples until one avoids all the given cycle lengths
// (each in {3,4,5,6}); throws std::runtime_error after max_attempts misses.
Graph random_graph_avoiding(int n, double p, const std::vector<int>& forbidden_lengths,
                            std::uint64_t seed, int max_attempts = 1000);

// Random formula with the given clause count; every clause draws `width`
// distinct variables (so no clause is tautological) and flips each sign
// with probability one half. Requires 1 <= width <= vars.
CnfFormula random_cnf(int vars, int clauses, int width, std::uint64_t seed);

}  // namespace relating
