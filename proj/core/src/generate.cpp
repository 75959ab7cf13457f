#include "relating/generate.hpp"

#include <random>
#include <stdexcept>

namespace relating {

namespace {

// std::uniform_int_distribution and friends are free to differ between
// standard libraries, which would break seed-for-seed reproducibility of
// generated instances. These two draws are pinned down completely by the
// mt19937_64 output stream.

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
  std::uint64_t r;
  do {
    r = rng();
  } while (r < threshold);
  return r % n;
}

bool bernoulli(std::mt19937_64& rng, double p) {
  return static_cast<double>(rng() >> 11) < p * 9007199254740992.0;  // 2^53
}

Graph draw_graph(std::mt19937_64& rng, int n, double p) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (bernoulli(rng, p)) edges.emplace_back(u, v);
  return Graph::build(n, edges);
}

}  // namespace

Graph random_graph(int n, double p, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("edge probability outside [0, 1]");
  std::mt19937_64 rng(seed);
  return draw_graph(rng, n, p);
}

Graph random_graph_avoiding(int n, double p, const std::vector<int>& forbidden_lengths,
                            std::uint64_t seed, int max_attempts) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("edge probability outside [0, 1]");
  for (int k : forbidden_lengths)
    if (k < 3 || k > 6) throw std::invalid_argument("forbidden cycle lengths must be 3..6");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Graph g = draw_graph(rng, n, p);
    bool clean = true;
    for (int k : forbidden_lengths)
      if (has_cycle_of_length(g, k)) {
        clean = false;
        break;
      }
    if (clean) return g;
  }
  throw std::runtime_error("no graph avoiding the forbidden cycles in " +
                           std::to_string(max_attempts) + " attempts");
}

CnfFormula random_cnf(int vars, int clauses, int width, std::uint64_t seed) {
  if (vars < 1) throw std::invalid_argument("need at least one variable");
  if (clauses < 0) throw std::invalid_argument("negative clause count");
  if (width < 1 || width > vars)
    throw std::invalid_argument("clause width must be in 1..vars");
  std::mt19937_64 rng(seed);
  CnfFormula f;
  f.variable_count = vars;
  std::vector<int> pool(vars);
  for (int i = 0; i < vars; ++i) pool[i] = i + 1;
  for (int c = 0; c < clauses; ++c) {
    // Distinct variables per clause, so no clause is tautological.
    for (int k = 0; k < width; ++k) {
      int j = k + static_cast<int>(bounded(rng, static_cast<std::uint64_t>(vars - k)));
      std::swap(pool[k], pool[j]);
    }
    std::vector<Literal> literals;
    for (int k = 0; k < width; ++k) literals.push_back({pool[k], bounded(rng, 2) == 1});
    f.clauses.emplace_back(std::move(literals));
  }
  return f;
}

}  // namespace relating
