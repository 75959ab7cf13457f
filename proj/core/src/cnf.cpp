#include "relating/cnf.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "relating/dimacs.hpp"

namespace relating {

Clause::Clause(std::initializer_list<Literal> literals)
    : Clause(std::vector<Literal>(literals)) {}

Clause::Clause(std::vector<Literal> literals) : literals_(std::move(literals)) {
  for (const auto& l : literals_)
    if (l.variable < 1) throw std::invalid_argument("literal variables are 1-based");
  std::sort(literals_.begin(), literals_.end());
  literals_.erase(std::unique(literals_.begin(), literals_.end()), literals_.end());
}

bool Clause::contains(Literal l) const {
  return std::binary_search(literals_.begin(), literals_.end(), l);
}

bool Clause::tautological() const {
  for (const auto& l : literals_)
    if (contains({l.variable, !l.positive})) return true;
  return false;
}

CnfFormula parse_cnf(std::istream& in) {
  std::string line;
  int vars = -1, promised = -1;
  std::vector<Clause> clauses;
  std::vector<Literal> pending;  // clauses may span lines
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream stream(line);
    std::string tok;
    if (!(stream >> tok)) continue;
    if (tok == "c") continue;
    if (tok == "p") {
      if (vars >= 0) throw ParseError("line " + std::to_string(line_no) + ": second header");
      std::string kind;
      if (!(stream >> kind) || kind != "cnf" || !(stream >> vars >> promised) || vars < 0 ||
          promised < 0 || (stream >> tok))
        throw ParseError("line " + std::to_string(line_no) + ": expected 'p cnf <vars> <clauses>'");
      continue;
    }
    if (vars < 0)
      throw ParseError("line " + std::to_string(line_no) + ": literal before header");
    do {
      int lit = 0;
      try {
        std::size_t used = 0;
        lit = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) + ": bad literal '" + tok + "'");
      }
      if (lit == 0) {
        clauses.emplace_back(std::move(pending));
        pending.clear();
        continue;
      }
      int var = lit > 0 ? lit : -lit;
      if (var > vars)
        throw ParseError("line " + std::to_string(line_no) + ": variable " +
                         std::to_string(var) + " exceeds the declared " + std::to_string(vars));
      pending.push_back({var, lit > 0});
    } while (stream >> tok);
  }
  if (vars < 0) throw ParseError("missing 'p cnf' header");
  if (!pending.empty()) throw ParseError("last clause is not 0-terminated");
  if (static_cast<int>(clauses.size()) != promised)
    throw ParseError("header promises " + std::to_string(promised) + " clauses, found " +
                     std::to_string(clauses.size()));
  return {vars, std::move(clauses)};
}

CnfFormula parse_cnf_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_cnf(in);
}

void write_dimacs_cnf(std::ostream& out, const CnfFormula& f) {
  out << "p cnf " << f.variable_count << ' ' << f.clauses.size() << '\n';
  for (const auto& clause : f.clauses) {
    for (const auto& l : clause) out << (l.positive ? l.variable : -l.variable) << ' ';
    out << "0\n";
  }
}

CnfFormula normalize_cnf(const CnfFormula& f) {
  CnfFormula out;
  out.variable_count = f.variable_count;
  for (const auto& clause : f.clauses)
    if (!clause.tautological()) out.clauses.push_back(clause);
  return out;
}

bool is_normalized(const CnfFormula& f) {
  return std::none_of(f.clauses.begin(), f.clauses.end(),
                      [](const Clause& c) { return c.tautological(); });
}

bool satisfies(const CnfFormula& f, const Assignment& a) {
  if (static_cast<int>(a.size()) != f.variable_count)
    throw std::invalid_argument("assignment size does not match the variable count");
  for (const auto& clause : f.clauses) {
    bool hit = false;
    for (const auto& l : clause)
      if (a[l.variable - 1] == l.positive) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

std::optional<Assignment> brute_sat(const CnfFormula& f) {
  if (f.variable_count > 24)
    throw std::invalid_argument("exhaustive satisfiability supports at most 24 variables");
  std::uint32_t limit = std::uint32_t{1} << f.variable_count;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    Assignment a(f.variable_count);
    for (int i = 0; i < f.variable_count; ++i) a[i] = (mask >> i) & 1;
    if (satisfies(f, a)) return a;
  }
  return std::nullopt;
}

}  // namespace relating
