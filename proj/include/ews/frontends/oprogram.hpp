#pragma once

#include <set>
#include <string>
#include <vector>

#include "ews/program.hpp"
#include "ews/system.hpp"
#include "ews/textparse.hpp"

namespace ews::frontends {

/// :~ pos, not neg. [weight@level]
struct WeakConstraint {
  std::vector<std::string> pos;
  std::vector<std::string> neg;
  std::int64_t weight = 0;
  int level = 1;
};

struct OProgram {
  LogicProgram rules;
  std::vector<WeakConstraint> weak;
};

namespace detail {

/// a1, ..., al, not a(l+1), ..., not am
inline void parse_literal_list(text::Cursor& c, std::vector<std::string>& pos,
                               std::vector<std::string>& neg,
                               const std::string& terminator) {
  for (;;) {
    if (c.try_consume("not")) neg.push_back(c.ident());
    else pos.push_back(c.ident());
    if (c.try_consume(",")) continue;
    c.expect(terminator);
    return;
  }
}

inline void parse_weight_annotation(text::Cursor& c, std::int64_t& weight,
                                    int& level) {
  c.expect("[");
  weight = c.integer();
  level = 1;
  if (c.try_consume("@")) {
    std::int64_t l = c.integer();
    if (l < 1) c.fail("level must be positive");
    level = int(l);
  }
  c.expect("]");
}

inline void parse_optimize_statement(text::Cursor& c, bool maximize,
                                     std::vector<WeakConstraint>& out) {
  c.expect("{");
  if (c.try_consume("}")) {
    c.try_consume(".");
    return;
  }
  for (;;) {
    WeakConstraint wc;
    wc.weight = c.integer();
    if (c.try_consume("@")) {
      std::int64_t l = c.integer();
      if (l < 1) c.fail("level must be positive");
      wc.level = int(l);
    }
    c.expect(":");
    if (c.try_consume("not")) wc.neg.push_back(c.ident());
    else wc.pos.push_back(c.ident());
    if (maximize) wc.weight = -wc.weight;
    out.push_back(std::move(wc));
    if (c.try_consume(",")) continue;
    c.expect("}");
    c.try_consume(".");
    return;
  }
}

}  // namespace detail

/// One statement per line; rules end with '.'; weak constraints
/// ':~ lits. [w@l]'; '#minimize{w@l: lit, ...}' expands to weak
/// constraints, '#maximize' with negated weights.
inline OProgram parse_oprogram(const std::string& text) {
  OProgram p;
  for (const auto& [lineno, line] : text::logical_lines(text, "%")) {
    text::Cursor c(line, lineno);
    if (c.try_consume("#minimize")) {
      detail::parse_optimize_statement(c, false, p.weak);
    } else if (c.try_consume("#maximize")) {
      detail::parse_optimize_statement(c, true, p.weak);
    } else if (c.try_consume(":~")) {
      WeakConstraint wc;
      detail::parse_literal_list(c, wc.pos, wc.neg, ".");
      detail::parse_weight_annotation(c, wc.weight, wc.level);
      p.weak.push_back(std::move(wc));
    } else if (c.try_consume(":-")) {
      Rule r;
      detail::parse_literal_list(c, r.pos, r.neg, ".");
      p.rules.push_back(std::move(r));
    } else {
      Rule r;
      r.head = c.ident();
      if (c.try_consume(":-")) {
        detail::parse_literal_list(c, r.pos, r.neg, ".");
      } else {
        c.expect(".");
      }
      p.rules.push_back(std::move(r));
    }
    if (!c.at_end()) c.fail("trailing input after statement");
  }
  return p;
}

/// Hard: lp-logic module (answer sets).  Each weak constraint becomes a
/// condition whose module is the body conjunction; min-optimal models are
/// the optimal answer sets.  Weak-constraint atoms outside the program
/// vocabulary extend it, with a warning.
inline EwSystem lower_oprogram(const OProgram& p,
                               std::vector<std::string>* warnings = nullptr) {
  std::set<std::string> atoms = program_atoms(p.rules);
  auto absorb = [&](const std::string& a) {
    if (!atoms.count(a)) {
      if (warnings)
        warnings->push_back("weak-constraint atom outside program: " + a);
      atoms.insert(a);
    }
  };
  for (const auto& wc : p.weak) {
    for (const auto& a : wc.pos) absorb(a);
    for (const auto& a : wc.neg) absorb(a);
  }
  Vocabulary vocab;
  for (const auto& a : atoms) vocab.add(a);

  EwSystem sys;
  sys.sense = Sense::Min;
  EModule hard;
  hard.kind = LogicKind::Lp;
  hard.vocab = vocab;
  hard.program = p.rules;
  sys.hard.push_back(std::move(hard));

  for (const auto& wc : p.weak) {
    EwCondition cond;
    cond.module.kind = LogicKind::Pl;
    cond.module.vocab = vocab;
    std::vector<PropFormula> lits;
    for (const auto& a : wc.pos) lits.push_back(PropFormula::atom(a));
    for (const auto& a : wc.neg)
      lits.push_back(PropFormula::negate(PropFormula::atom(a)));
    cond.module.formulas.push_back(
        lits.size() == 1 ? lits[0] : PropFormula::conj(std::move(lits)));
    cond.weight = wc.weight;
    cond.level = wc.level;
    sys.soft.push_back(std::move(cond));
  }
  return sys;
}

}  // namespace ews::frontends
