#include "relating/oracle.hpp"

#include <bit>
#include <cstdint>
#include <sstream>

namespace relating {

bool verify_relating_witness(const Graph& g, int x, int y, const RelatingWitness& w) {
  if (x < 0 || x >= g.vertex_count() || y < 0 || y >= g.vertex_count() || x == y)
    return false;
  if (!g.has_edge(x, y)) return false;
  for (int v : w.s)
    if (v < 0 || v >= g.vertex_count()) return false;
  if (w.s.contains(x) || w.s.contains(y)) return false;
  return is_maximal_independent(g, w.s.with(x)) && is_maximal_independent(g, w.s.with(y));
}

std::string format_witness(const std::optional<RelatingWitness>& w) {
  if (!w) return "witness none";
  std::ostringstream out;
  out << "witness " << w->s.size() << " :";
  for (int v : w->s) out << ' ' << v + 1;
  return out.str();
}

std::optional<RelatingWitness> parse_witness(const std::string& line) {
  std::istringstream in(line);
  std::string word;
  if (!(in >> word) || word != "witness")
    throw std::invalid_argument("witness line must start with 'witness'");
  if (!(in >> word)) throw std::invalid_argument("truncated witness line");
  if (word == "none") {
    if (in >> word) throw std::invalid_argument("trailing tokens after 'witness none'");
    return std::nullopt;
  }
  std::size_t count = 0;
  try {
    count = std::stoul(word);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad witness size '" + word + "'");
  }
  if (!(in >> word) || word != ":")
    throw std::invalid_argument("expected ':' after witness size");
  std::vector<int> ids;
  int v = 0;
  while (in >> v) {
    if (v < 1) throw std::invalid_argument("witness vertices are 1-based");
    ids.push_back(v - 1);
  }
  if (!in.eof()) throw std::invalid_argument("bad token in witness line");
  VertexSet s(std::move(ids));
  if (s.size() != count)
    throw std::invalid_argument("witness size does not match vertex list");
  return RelatingWitness{std::move(s)};
}

namespace {

using Mask = std::uint64_t;

VertexSet mask_to_set(Mask m) {
  std::vector<int> ids;
  while (m) {
    int v = std::countr_zero(m);
    ids.push_back(v);
    m &= m - 1;
  }
  return VertexSet(std::move(ids));
}

// Bron-Kerbosch with pivoting. Maximal independent sets of g are maximal
// cliques of the complement, so `nb[v]` holds the complement neighborhood.
struct MisSearch {
  const std::vector<Mask>& nb;
  const std::function<bool(const VertexSet&)>& visit;
  bool stopped = false;

  void run(Mask current, Mask candidates, Mask excluded) {
    if (stopped) return;
    if (!candidates && !excluded) {
      if (!visit(mask_to_set(current))) stopped = true;
      return;
    }
    // Pivot on the vertex covering the most candidates.
    Mask pool = candidates | excluded;
    int pivot = -1, best = -1;
    for (Mask p = pool; p;) {
      int v = std::countr_zero(p);
      p &= p - 1;
      int covered = std::popcount(candidates & nb[v]);
      if (covered > best) {
        best = covered;
        pivot = v;
      }
    }
    Mask branch = candidates & ~nb[pivot];
    while (branch) {
      int v = std::countr_zero(branch);
      branch &= branch - 1;
      Mask bit = Mask{1} << v;
      run(current | bit, candidates & nb[v], excluded & nb[v]);
      if (stopped) return;
      candidates &= ~bit;
      excluded |= bit;
    }
  }
};

}  // namespace

bool for_each_maximal_independent_set(const Graph& g,
                                      const std::function<bool(const VertexSet&)>& visit) {
  int n = g.vertex_count();
  if (n > 64) throw std::invalid_argument("maximal-set enumeration supports at most 64 vertices");
  Mask full = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  std::vector<Mask> complement(n);
  for (int v = 0; v < n; ++v) {
    Mask adj = 0;
    for (int w : g.neighbors(v)) adj |= Mask{1} << w;
    complement[v] = full & ~adj & ~(Mask{1} << v);
  }
  MisSearch search{complement, visit};
  search.run(0, full, 0);
  return !search.stopped;
}

MisEnumeration enumerate_maximal_independent_sets(const Graph& g,
                                                  std::optional<std::size_t> cap) {
  MisEnumeration out;
  bool completed = for_each_maximal_independent_set(g, [&](const VertexSet& s) {
    if (cap && out.sets.size() == *cap) return false;
    out.sets.push_back(s);
    return true;
  });
  out.truncated = !completed;
  return out;
}

int independence_number(const Graph& g) {
  int best = 0;
  for_each_maximal_independent_set(g, [&](const VertexSet& s) {
    best = std::max(best, static_cast<int>(s.size()));
    return true;
  });
  return best;
}

bool is_well_covered(const Graph& g) {
  std::optional<std::size_t> first;
  bool uniform = true;
  for_each_maximal_independent_set(g, [&](const VertexSet& s) {
    if (!first) {
      first = s.size();
      return true;
    }
    if (s.size() != *first) {
      uniform = false;
      return false;
    }
    return true;
  });
  return uniform;
}

BruteDecision is_relating_brute(const Graph& g, int x, int y,
                                std::optional<std::size_t> cap) {
  if (!g.has_edge(x, y)) throw std::invalid_argument("is_relating_brute: xy is not an edge");

  // Any witness avoids N[x] and N[y] and is maximal independent within the
  // rest of the graph, so it is enough to check those sets.
  VertexSet excluded{x, y};
  for (int w : g.neighbors(x)) excluded.add(w);
  for (int w : g.neighbors(y)) excluded.add(w);
  std::vector<int> rest;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!excluded.contains(v)) rest.push_back(v);
  auto [sub, mapping] = induced_subgraph(g, VertexSet(std::move(rest)));

  BruteDecision out;
  std::size_t examined = 0;
  bool completed = for_each_maximal_independent_set(sub, [&](const VertexSet& local) {
    if (cap && examined == *cap) {
      out.truncated = true;
      return false;
    }
    ++examined;
    std::vector<int> ids;
    ids.reserve(local.size());
    for (int v : local) ids.push_back(mapping[v]);
    RelatingWitness candidate{VertexSet(std::move(ids))};
    if (verify_relating_witness(g, x, y, candidate)) {
      out.witness = std::move(candidate);
      return false;
    }
    return true;
  });
  (void)completed;
  return out;
}

}  // namespace relating
