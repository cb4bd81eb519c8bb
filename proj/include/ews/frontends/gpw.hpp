#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ews/system.hpp"
#include "ews/textparse.hpp"

namespace ews::frontends {

struct SoftAssert {
  PropFormula formula;
  std::int64_t weight = 1;
  int level = 1;
  std::map<std::string, Rational> coeffs;
};

/// Hard SMT theory plus weighted/leveled/coefficient-bearing soft
/// assertions; the nu-Z assert-soft surface with the generalized
/// extensions.
struct GpwProblem {
  Vocabulary vocab;
  Specification spec;
  Denotation denot;
  std::vector<PropFormula> hard;
  std::vector<SoftAssert> soft;
  std::optional<std::string> minimize_var;  // present for OMT inputs
};

namespace detail {

inline void check_declared_atoms(const PropFormula& f, const Vocabulary& vocab,
                                 int lineno) {
  std::set<std::string> atoms;
  f.collect_atoms(atoms);
  for (const auto& a : atoms)
    if (!vocab.contains(a)) throw ParseError(lineno, "undeclared atom: " + a);
}

inline void check_constraint_vars(const Constraint& c, const Specification& spec,
                                  int lineno) {
  for (const auto& v : constraint_variables(c))
    if (!spec.contains(v)) throw ParseError(lineno, "undeclared variable: " + v);
}

}  // namespace detail

/// Line oriented:
///   var x int -2 2
///   atom a                (regular atom)
///   atom a1 := x > 0      (constraint atom with linear denotation)
///   assert <formula>
///   assert-soft <formula> [:weight n] [:level l] [:coeff x=p/q ...]
///   minimize x            (OMT objective variable)
inline GpwProblem parse_gpw(const std::string& text) {
  GpwProblem p;
  for (const auto& [lineno, line] : text::logical_lines(text, ";")) {
    text::Cursor c(line, lineno);
    if (c.try_consume("var")) {
      std::string name = c.ident();
      c.expect("int");
      std::int64_t lo = c.integer();
      std::int64_t hi = c.integer();
      if (lo > hi) c.fail("empty domain");
      p.spec.add_range(name, lo, hi);
    } else if (c.try_consume("atom")) {
      std::string name = c.ident();
      if (c.try_consume(":=")) {
        LinearConstraint lc = text::parse_linear_constraint(c);
        detail::check_constraint_vars(lc, p.spec, lineno);
        p.vocab.add(name, AtomKind::Constraint);
        p.denot[name] = lc;
      } else {
        p.vocab.add(name, AtomKind::Regular);
      }
    } else if (c.try_consume("assert-soft")) {
      SoftAssert sa{text::parse_formula(c), 1, 1, {}};
      detail::check_declared_atoms(sa.formula, p.vocab, lineno);
      while (!c.at_end()) {
        if (c.try_consume(":weight")) {
          sa.weight = c.integer();
        } else if (c.try_consume(":level")) {
          std::int64_t l = c.integer();
          if (l < 1) c.fail("level must be positive");
          sa.level = int(l);
        } else if (c.try_consume(":coeff")) {
          std::string v = c.ident();
          if (!p.spec.contains(v)) c.fail("undeclared variable: " + v);
          c.expect("=");
          sa.coeffs[v] = c.rational();
        } else {
          c.fail("expected :weight, :level or :coeff");
        }
      }
      p.soft.push_back(std::move(sa));
    } else if (c.try_consume("assert")) {
      PropFormula f = text::parse_formula(c);
      detail::check_declared_atoms(f, p.vocab, lineno);
      p.hard.push_back(std::move(f));
    } else if (c.try_consume("minimize")) {
      std::string v = c.ident();
      if (!p.spec.contains(v)) c.fail("undeclared variable: " + v);
      p.minimize_var = v;
    } else {
      c.fail("expected var, atom, assert, assert-soft or minimize");
    }
    if (!c.at_end()) c.fail("trailing input");
  }
  return p;
}

/// Hard SMT module plus one condition per soft line; max-optimal models
/// are the gpw solutions, max-optimal extended models the extended ones.
inline EwSystem lower_gpw(const GpwProblem& p, AtomMode mode = AtomMode::Strict) {
  EwSystem sys;
  sys.sense = Sense::Max;
  sys.mode = mode;
  EModule hard;
  hard.kind = LogicKind::Smt;
  hard.vocab = p.vocab;
  hard.spec = p.spec;
  hard.denot = p.denot;
  hard.formulas = p.hard;
  hard.mode = mode;
  sys.hard.push_back(std::move(hard));
  for (const auto& sa : p.soft) {
    EwCondition cond;
    cond.module.kind = LogicKind::Smt;
    cond.module.vocab = p.vocab;
    cond.module.spec = p.spec;
    cond.module.denot = p.denot;
    cond.module.formulas.push_back(sa.formula);
    cond.module.mode = mode;
    cond.weight = sa.weight;
    cond.level = sa.level;
    cond.coeffs = sa.coeffs;
    sys.soft.push_back(std::move(cond));
  }
  return sys;
}

/// OMT: hard SMT system, soft part a single condition over the objective
/// variable with unit coefficient; min-optimal extended models are the
/// OMT solutions.
inline EwSystem lower_omt(const GpwProblem& p, const std::string& objective_var,
                          AtomMode mode = AtomMode::Strict) {
  if (!p.spec.contains(objective_var))
    throw SignatureError("unknown objective variable: " + objective_var);
  EwSystem sys;
  sys.sense = Sense::Min;
  sys.mode = mode;
  EModule hard;
  hard.kind = LogicKind::Smt;
  hard.vocab = p.vocab;
  hard.spec = p.spec;
  hard.denot = p.denot;
  hard.formulas = p.hard;
  hard.mode = mode;
  sys.hard.push_back(std::move(hard));

  EwCondition cond;
  Specification obj_spec;
  obj_spec.add(objective_var, p.spec.domain_of(objective_var));
  cond.module = universal_module(Vocabulary{}, std::move(obj_spec));
  cond.weight = 0;
  cond.coeffs[objective_var] = Rational(1);
  sys.soft.push_back(std::move(cond));
  return sys;
}

}  // namespace ews::frontends
