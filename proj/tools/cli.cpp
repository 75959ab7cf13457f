#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>

#include "relating/dimacs.hpp"
#include "relating/generate.hpp"
#include "relating/oracle.hpp"
#include "relating/poly.hpp"
#include "relating/reduction.hpp"

namespace relating::cli {

namespace {

// Resolves a 1-based endpoint pair against g; throws ParseError with a
// user-facing message otherwise.
std::pair<int, int> resolve_edge(const Graph& g, int x1, int y1) {
  if (x1 < 1 || x1 > g.vertex_count() || y1 < 1 || y1 > g.vertex_count())
    throw ParseError("vertex out of 1.." + std::to_string(g.vertex_count()));
  int x = x1 - 1, y = y1 - 1;
  if (x == y || !g.has_edge(x, y))
    throw ParseError("(" + std::to_string(x1) + ", " + std::to_string(y1) +
                     ") is not an edge");
  return {x, y};
}

bool brute_feasible(const Graph& g, int max_vertices) {
  return g.vertex_count() <= max_vertices && g.vertex_count() <= 64;
}

struct CheckOptions {
  std::string graph_file;
  int x = 0, y = 0;
  std::string mode = "auto";
  int max_vertices = 25;
  bool trust_cycle_free = false;
};

int cmd_check(const CheckOptions& opt, std::ostream& out, std::ostream& err) {
  Graph g = read_dimacs_graph_file(opt.graph_file);
  auto [x, y] = resolve_edge(g, opt.x, opt.y);

  std::string mode = opt.mode;
  if (mode == "auto") {
    if (opt.trust_cycle_free || !(has_cycle_of_length(g, 4) || has_cycle_of_length(g, 6)))
      mode = "poly";
    else
      mode = "brute";
  }

  if (mode == "poly") {
    PolyDecision d = is_relating_poly(g, x, y, opt.trust_cycle_free);
    out << "algorithm: poly\n";
    out << "decision: " << (d.relating ? "relating" : "not-relating") << '\n';
    if (d.relating) out << format_witness(d.witness) << '\n';
    return d.relating ? kRelating : kNotRelating;
  }

  out << "algorithm: brute\n";
  if (!brute_feasible(g, opt.max_vertices)) {
    out << "decision: unknown\n";
    err << "error: " << g.vertex_count() << " vertices exceed the brute-force cap of "
        << std::min(opt.max_vertices, 64) << " (raise --max-vertices)\n";
    return kCapExceeded;
  }
  BruteDecision d = is_relating_brute(g, x, y);
  out << "decision: " << (d.relating() ? "relating" : "not-relating") << '\n';
  if (d.relating()) out << format_witness(d.witness) << '\n';
  return d.relating() ? kRelating : kNotRelating;
}

struct ReduceOptions {
  std::string cnf_file;
  std::string out_prefix;
};

int cmd_reduce(const ReduceOptions& opt, std::ostream& out, std::ostream& err) {
  CnfFormula f = parse_cnf_file(opt.cnf_file);
  CnfFormula normalized = normalize_cnf(f);
  std::size_t dropped = f.clauses.size() - normalized.clauses.size();
  if (dropped > 0)
    err << "note: dropped " << dropped << " tautological clause(s)\n";
  ReductionArtifact art = reduce(normalized);

  std::string graph_path = opt.out_prefix + ".graph";
  std::string labels_path = opt.out_prefix + ".labels";
  std::ofstream graph_out(graph_path);
  if (!graph_out) throw ParseError("cannot write " + graph_path);
  write_dimacs_graph(graph_out, art.graph);
  std::ofstream labels_out(labels_path);
  if (!labels_out) throw ParseError("cannot write " + labels_path);
  write_labels(labels_out, art);

  // reduce() has already asserted both cycle checks.
  out << "vertices: " << art.graph.vertex_count() << '\n';
  out << "edges: " << art.graph.edge_count() << '\n';
  out << "C4: no\n";
  out << "C5: no\n";
  out << "graph: " << graph_path << '\n';
  out << "labels: " << labels_path << '\n';
  out << "query: " << art.x + 1 << ' ' << art.y + 1 << '\n';
  return kRelating;
}

struct AnalyzeOptions {
  std::string graph_file;
  int max_vertices = 25;
  std::string edges;  // "" or "all"
};

int cmd_analyze(const AnalyzeOptions& opt, std::ostream& out, std::ostream&) {
  Graph g = read_dimacs_graph_file(opt.graph_file);
  bool c4 = has_cycle_of_length(g, 4);
  bool c5 = has_cycle_of_length(g, 5);
  bool c6 = has_cycle_of_length(g, 6);
  out << "C4: " << (c4 ? "yes" : "no") << '\n';
  out << "C5: " << (c5 ? "yes" : "no") << '\n';
  out << "C6: " << (c6 ? "yes" : "no") << '\n';

  int code = kRelating;
  bool feasible = brute_feasible(g, opt.max_vertices);
  if (feasible) {
    out << "alpha: " << independence_number(g) << '\n';
    out << "well-covered: " << (is_well_covered(g) ? "yes" : "no") << '\n';
  } else {
    out << "alpha: skipped (vertex cap)\n";
    out << "well-covered: skipped (vertex cap)\n";
    code = kCapExceeded;
  }

  if (opt.edges == "all") {
    bool cycle_free = !c4 && !c6;
    for (auto [u, v] : g.edges()) {
      out << "edge " << u + 1 << ' ' << v + 1 << ": ";
      if (cycle_free) {
        PolyDecision d = is_relating_poly(g, u, v, true);
        out << (d.relating ? "relating" : "not-relating") << '\n';
      } else if (feasible) {
        BruteDecision d = is_relating_brute(g, u, v);
        out << (d.relating() ? "relating" : "not-relating") << '\n';
      } else {
        out << "skipped (vertex cap)\n";
        code = kCapExceeded;
      }
    }
  }
  return code;
}

struct GenCnfOptions {
  int vars = 0, clauses = 0, width = 2;
  std::uint64_t seed = 0;
  std::string out_path;
};

struct GenGraphOptions {
  int vertices = 0;
  double prob = 0.0;
  std::vector<int> forbid;
  std::uint64_t seed = 0;
  int attempts = 1000;
  std::string out_path;
};

int write_instance(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    std::ofstream file(path);
    if (!file) throw ParseError("cannot write " + path);
    file << text;
  }
  return kRelating;
}

int cmd_gen_cnf(const GenCnfOptions& opt, std::ostream& out) {
  CnfFormula f = random_cnf(opt.vars, opt.clauses, opt.width, opt.seed);
  std::ostringstream text;
  write_dimacs_cnf(text, f);
  return write_instance(opt.out_path, text.str(), out);
}

int cmd_gen_graph(const GenGraphOptions& opt, std::ostream& out) {
  Graph g = opt.forbid.empty()
                ? random_graph(opt.vertices, opt.prob, opt.seed)
                : random_graph_avoiding(opt.vertices, opt.prob, opt.forbid, opt.seed,
                                        opt.attempts);
  return write_instance(opt.out_path, to_dimacs(g), out);
}

struct VerifyOptions {
  std::string graph_file;
  int x = 0, y = 0;
  std::string witness_file;
};

int cmd_verify_witness(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  Graph g = read_dimacs_graph_file(opt.graph_file);
  auto [x, y] = resolve_edge(g, opt.x, opt.y);
  std::ifstream in(opt.witness_file);
  if (!in) throw ParseError("cannot open " + opt.witness_file);
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty witness file");
  std::optional<RelatingWitness> w = parse_witness(line);
  if (!w) {
    err << "error: the file declares no witness\n";
    return kInputError;
  }
  bool ok = verify_relating_witness(g, x, y, *w);
  out << "witness: " << (ok ? "valid" : "invalid") << '\n';
  return ok ? kRelating : kNotRelating;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"relating edge toolkit"};
  app.require_subcommand(1);

  CheckOptions check_opt;
  auto* check = app.add_subcommand("check", "decide whether an edge is relating");
  check->add_option("graph", check_opt.graph_file, "DIMACS edge file")->required();
  check->add_option("x", check_opt.x, "first endpoint, 1-based")->required();
  check->add_option("y", check_opt.y, "second endpoint, 1-based")->required();
  check->add_option("--mode", check_opt.mode, "auto, poly or brute")
      ->check(CLI::IsMember({"auto", "poly", "brute"}))
      ->capture_default_str();
  check->add_option("--max-vertices", check_opt.max_vertices, "brute-force vertex cap")
      ->capture_default_str();
  check->add_flag("--trust-cycle-free", check_opt.trust_cycle_free,
                  "skip the 4-/6-cycle precondition test");

  ReduceOptions reduce_opt;
  auto* reduce = app.add_subcommand("reduce", "turn a CNF formula into an edge query");
  reduce->add_option("cnf", reduce_opt.cnf_file, "DIMACS CNF file")->required();
  reduce->add_option("prefix", reduce_opt.out_prefix, "output path prefix")->required();

  AnalyzeOptions analyze_opt;
  auto* analyze = app.add_subcommand("analyze", "report short cycles, alpha and coverage");
  analyze->add_option("graph", analyze_opt.graph_file, "DIMACS edge file")->required();
  analyze->add_option("--max-vertices", analyze_opt.max_vertices, "brute-force vertex cap")
      ->capture_default_str();
  analyze->add_option("--edges", analyze_opt.edges, "classify edges ('all')")
      ->check(CLI::IsMember({"all"}));

  auto* gen = app.add_subcommand("gen", "generate a pseudo-random instance");
  gen->require_subcommand(1);
  GenCnfOptions gen_cnf_opt;
  auto* gen_cnf = gen->add_subcommand("cnf", "random formula");
  gen_cnf->add_option("-n,--vars", gen_cnf_opt.vars, "variable count")->required();
  gen_cnf->add_option("-m,--clauses", gen_cnf_opt.clauses, "clause count")->required();
  gen_cnf->add_option("-k,--width", gen_cnf_opt.width, "literals per clause")
      ->capture_default_str();
  gen_cnf->add_option("-s,--seed", gen_cnf_opt.seed, "random seed")->capture_default_str();
  gen_cnf->add_option("-o,--out", gen_cnf_opt.out_path, "output file (default stdout)");
  GenGraphOptions gen_graph_opt;
  auto* gen_graph = gen->add_subcommand("graph", "random graph");
  gen_graph->add_option("-n,--vertices", gen_graph_opt.vertices, "vertex count")->required();
  gen_graph->add_option("-p,--prob", gen_graph_opt.prob, "edge probability")->required();
  gen_graph->add_option("--forbid", gen_graph_opt.forbid,
                        "cycle lengths to avoid, e.g. --forbid 4,6")
      ->delimiter(',');
  gen_graph->add_option("-s,--seed", gen_graph_opt.seed, "random seed")->capture_default_str();
  gen_graph->add_option("--attempts", gen_graph_opt.attempts, "rejection sampling limit")
      ->capture_default_str();
  gen_graph->add_option("-o,--out", gen_graph_opt.out_path, "output file (default stdout)");

  VerifyOptions verify_opt;
  auto* verify = app.add_subcommand("verify-witness", "check a serialized witness");
  verify->add_option("graph", verify_opt.graph_file, "DIMACS edge file")->required();
  verify->add_option("x", verify_opt.x, "first endpoint, 1-based")->required();
  verify->add_option("y", verify_opt.y, "second endpoint, 1-based")->required();
  verify->add_option("witness", verify_opt.witness_file, "file holding a witness line")
      ->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (check->parsed()) return cmd_check(check_opt, out, err);
    if (reduce->parsed()) return cmd_reduce(reduce_opt, out, err);
    if (analyze->parsed()) return cmd_analyze(analyze_opt, out, err);
    if (gen_cnf->parsed()) return cmd_gen_cnf(gen_cnf_opt, out);
    if (gen_graph->parsed()) return cmd_gen_graph(gen_graph_opt, out);
    if (verify->parsed()) return cmd_verify_witness(verify_opt, out, err);
  } catch (const NotC4C6FreeError& e) {
    err << "error: " << e.what() << '\n';
    return kPreconditionViolation;
  } catch (const ForbiddenCycleError& e) {
    err << "error: " << e.what() << '\n';
    return kPreconditionViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace relating::cli
