#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace relating {

// Signed occurrence of a 1-based variable.
struct Literal {
  int variable = 0;
  bool positive = true;

  friend auto operator<=>(const Literal&, const Literal&) = default;
};

// Duplicate-free, sorted literal list. Clauses may be empty (unsatisfiable).
class Clause {
 public:
  Clause() = default;
  Clause(std::initializer_list<Literal> literals);
  explicit Clause(std::vector<Literal> literals);

  bool empty() const { return literals_.empty(); }
  std::size_t size() const { return literals_.size(); }
  const std::vector<Literal>& literals() const { return literals_; }
  auto begin() const { return literals_.begin(); }
  auto end() const { return literals_.end(); }

  bool contains(Literal l) const;
  // Holds both l and its negation for some variable.
  bool tautological() const;

  friend bool operator==(const Clause&, const Clause&) = default;

 private:
  std::vector<Literal> literals_;
};

struct CnfFormula {
  int variable_count = 0;
  std::vector<Clause> clauses;

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

// DIMACS CNF: comments, one "p cnf <vars> <clauses>" header, then
// 0-terminated clauses. The clause count must match the header exactly and
// every variable must lie in [1, vars]. Repeated literals in one clause
// collapse. Throws ParseError on malformed input.
CnfFormula parse_cnf(std::istream& in);
CnfFormula parse_cnf_file(const std::string& path);

void write_dimacs_cnf(std::ostream& out, const CnfFormula& f);

// Drops tautological clauses; empty clauses stay.
CnfFormula normalize_cnf(const CnfFormula& f);
bool is_normalized(const CnfFormula& f);

// index i-1 holds the value of variable i
using Assignment = std::vector<bool>;

bool satisfies(const CnfFormula& f, const Assignment& a);

// First satisfying assignment in ascending-bitmask order (variable 1 is the
// low bit), or nullopt when unsatisfiable. Requires variable_count <= 24.
std::optional<Assignment> brute_sat(const CnfFormula& f);

}  // namespace relating
