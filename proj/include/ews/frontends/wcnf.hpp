#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "ews/system.hpp"
#include "ews/textparse.hpp"

namespace ews::frontends {

/// DIMACS weighted partial CNF: clauses with weight `top` are hard,
/// smaller positive weights are soft.
struct WcnfProblem {
  int num_vars = 0;
  std::int64_t top = 0;
  std::vector<std::vector<int>> hard;
  std::vector<std::pair<std::int64_t, std::vector<int>>> soft;
};

inline WcnfProblem parse_wcnf(const std::string& text) {
  WcnfProblem p;
  bool seen_header = false;
  for (const auto& [lineno, line] : text::logical_lines(text, "c")) {
    std::istringstream in(line);
    if (!seen_header) {
      std::string tok, fmt;
      std::int64_t nv = 0, nc = 0, top = 0;
      if (!(in >> tok >> fmt >> nv >> nc >> top) || tok != "p" || fmt != "wcnf")
        throw ParseError(lineno, "expected header 'p wcnf <nv> <nc> <top>'");
      if (nv < 0 || top <= 0) throw ParseError(lineno, "bad header values");
      p.num_vars = int(nv);
      p.top = top;
      seen_header = true;
      continue;
    }
    std::int64_t w;
    if (!(in >> w)) throw ParseError(lineno, "expected clause weight");
    if (w <= 0 || w > p.top)
      throw ParseError(lineno, "clause weight must be in 1..top");
    std::vector<int> lits;
    int lit;
    bool terminated = false;
    while (in >> lit) {
      if (lit == 0) { terminated = true; break; }
      if (lit > p.num_vars || lit < -p.num_vars)
        throw ParseError(lineno, "literal out of range: " + std::to_string(lit));
      lits.push_back(lit);
    }
    if (!terminated) throw ParseError(lineno, "clause not terminated by 0");
    if (w == p.top) p.hard.push_back(lits);
    else p.soft.push_back({w, lits});
  }
  if (!seen_header) throw ParseError(1, "missing 'p wcnf' header");
  return p;
}

inline std::string wcnf_atom_name(int var) { return "x" + std::to_string(var); }

inline PropFormula wcnf_clause_formula(const std::vector<int>& lits) {
  std::vector<PropFormula> kids;
  for (int lit : lits)
    kids.push_back(PropFormula::literal(wcnf_atom_name(lit < 0 ? -lit : lit),
                                        lit > 0));
  if (kids.empty())
    // The empty clause: unsatisfiable, encoded as x1 and not x1 over a
    // throwaway reading -- use a plain contradiction.
    return PropFormula::conj({PropFormula::atom("x1"),
                              PropFormula::negate(PropFormula::atom("x1"))});
  return kids.size() == 1 ? kids[0] : PropFormula::disj(std::move(kids));
}

/// Hard clauses as one sat-logic module, each soft clause as a weighted
/// condition at level 1; max-optimal models are the pw-MaxSAT solutions.
inline EwSystem lower_wcnf(const WcnfProblem& p) {
  Vocabulary vocab;
  for (int v = 1; v <= std::max(p.num_vars, p.hard.empty() && p.soft.empty() ? 0 : 1); ++v)
    vocab.add(wcnf_atom_name(v));
  EwSystem sys;
  sys.sense = Sense::Max;
  EModule hard;
  hard.kind = LogicKind::Sat;
  hard.vocab = vocab;
  for (const auto& clause : p.hard)
    hard.formulas.push_back(wcnf_clause_formula(clause));
  sys.hard.push_back(std::move(hard));
  for (const auto& [w, clause] : p.soft) {
    EwCondition cond;
    cond.module.kind = LogicKind::Sat;
    cond.module.vocab = vocab;
    cond.module.formulas.push_back(wcnf_clause_formula(clause));
    cond.weight = w;
    sys.soft.push_back(std::move(cond));
  }
  return sys;
}

}  // namespace ews::frontends
