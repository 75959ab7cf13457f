#include "relating/dimacs.hpp"

#include <fstream>
#include <sstream>

namespace relating {

namespace {

// Splits a line into whitespace-separated tokens.
std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream stream(line);
  std::vector<std::string> out;
  std::string tok;
  while (stream >> tok) out.push_back(tok);
  return out;
}

int parse_int(const std::string& tok, const std::string& what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(tok, &used);
  } catch (const std::exception&) {
    throw ParseError("bad " + what + ": '" + tok + "'");
  }
  if (used != tok.size()) throw ParseError("bad " + what + ": '" + tok + "'");
  return value;
}

}  // namespace

Graph read_dimacs_graph(std::istream& in) {
  std::string line;
  int n = -1, m = -1;
  std::vector<std::pair<int, int>> edges;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto toks = tokens_of(line);
    if (toks.empty() || toks[0] == "c") continue;
    if (toks[0] == "p") {
      if (n >= 0) throw ParseError("line " + std::to_string(line_no) + ": second header");
      if (toks.size() != 4 || toks[1] != "edge")
        throw ParseError("line " + std::to_string(line_no) + ": expected 'p edge <n> <m>'");
      n = parse_int(toks[2], "vertex count");
      m = parse_int(toks[3], "edge count");
      if (n < 0 || m < 0)
        throw ParseError("line " + std::to_string(line_no) + ": negative count");
      continue;
    }
    if (toks[0] == "e") {
      if (n < 0) throw ParseError("line " + std::to_string(line_no) + ": edge before header");
      if (toks.size() != 3)
        throw ParseError("line " + std::to_string(line_no) + ": expected 'e <u> <v>'");
      int u = parse_int(toks[1], "endpoint");
      int v = parse_int(toks[2], "endpoint");
      if (u < 1 || u > n || v < 1 || v > n)
        throw ParseError("line " + std::to_string(line_no) + ": endpoint out of 1.." +
                         std::to_string(n));
      edges.emplace_back(u - 1, v - 1);
      continue;
    }
    throw ParseError("line " + std::to_string(line_no) + ": unknown record '" + toks[0] + "'");
  }
  if (n < 0) throw ParseError("missing 'p edge' header");
  if (static_cast<int>(edges.size()) != m)
    throw ParseError("header promises " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  try {
    return Graph::build(n, edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Graph read_dimacs_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_dimacs_graph(in);
}

void write_dimacs_graph(std::ostream& out, const Graph& g) {
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

std::string to_dimacs(const Graph& g) {
  std::ostringstream out;
  write_dimacs_graph(out, g);
  return out.str();
}

}  // namespace relating
