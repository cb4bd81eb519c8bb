#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ews/frontends/oprogram.hpp"
#include "ews/system.hpp"
#include "ews/textparse.hpp"

namespace ews::frontends {

/// One element of a $minimize statement: a linear term over one variable
/// plus a constant, optionally leveled (third-generation syntax).
struct CaspObjectiveTerm {
  std::map<std::string, std::int64_t> coeffs;
  std::int64_t constant = 0;
  int level = 1;
  bool has_level = false;
  int lineno = 0;
};

/// Constraint answer set program: an o-program with declared integer
/// variables, declared constraint atoms (linear or tabled), and objective
/// statements.
struct CaspProgram {
  LogicProgram rules;
  std::vector<WeakConstraint> weak;
  Specification spec;
  Vocabulary declared;  // constraint atoms only
  Denotation denot;
  std::vector<CaspObjectiveTerm> objectives;
};

namespace detail {

/// table(x, y) {1, 2; 3, 4}
inline ExtensionalConstraint parse_table(text::Cursor& c,
                                         const Specification& spec) {
  ExtensionalConstraint ec;
  c.expect("(");
  for (;;) {
    std::string v = c.ident();
    if (!spec.contains(v)) c.fail("undeclared variable: " + v);
    ec.tuple.push_back(v);
    if (c.try_consume(",")) continue;
    c.expect(")");
    break;
  }
  c.expect("{");
  if (c.try_consume("}")) return ec;
  for (;;) {
    std::vector<std::int64_t> row;
    row.push_back(c.integer());
    while (c.try_consume(",")) row.push_back(c.integer());
    if (row.size() != ec.tuple.size())
      c.fail("table row arity does not match the variable tuple");
    ec.allowed.insert(std::move(row));
    if (c.try_consume(";")) continue;
    c.expect("}");
    return ec;
  }
}

inline void parse_minimize_statement(text::Cursor& c,
                                     std::vector<CaspObjectiveTerm>& out) {
  c.expect("{");
  if (c.try_consume("}")) {
    c.try_consume(".");
    return;
  }
  for (;;) {
    CaspObjectiveTerm term;
    term.lineno = c.line();
    text::parse_linear_side(c, term.coeffs, term.constant, +1);
    if (c.try_consume("@")) {
      std::int64_t l = c.integer();
      if (l < 1) c.fail("level must be positive");
      term.level = int(l);
      term.has_level = true;
    }
    out.push_back(std::move(term));
    if (c.try_consume(",")) continue;
    c.expect("}");
    c.try_consume(".");
    return;
  }
}

}  // namespace detail

/// O-program statements plus:
///   var x int 1 10
///   atom q := x + y > 3.
///   atom t := table(x) {1; 2; 3}.
///   $minimize{x, y}.            (variable form)
///   $minimize{2*x + 1 @ 1}.     (leveled linear form)
inline CaspProgram parse_casp(const std::string& text) {
  CaspProgram p;
  for (const auto& [lineno, line] : text::logical_lines(text, "%")) {
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
      c.expect(":=");
      if (c.try_consume("table")) {
        p.denot[name] = detail::parse_table(c, p.spec);
      } else {
        LinearConstraint lc = text::parse_linear_constraint(c);
        for (const auto& [b, v] : lc.terms)
          if (!p.spec.contains(v)) c.fail("undeclared variable: " + v);
        p.denot[name] = lc;
      }
      c.try_consume(".");
      p.declared.add(name, AtomKind::Constraint);
    } else if (c.try_consume("$minimize")) {
      detail::parse_minimize_statement(c, p.objectives);
    } else if (c.try_consume("#minimize")) {
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

namespace detail {

/// Shared hard part of all three lowerings: one cas-logic module over the
/// program's atoms (regular plus declared constraint atoms), variables and
/// denotation.  Constraint atoms must not occur in rule heads.
inline EwSystem casp_base(const CaspProgram& p, AtomMode mode) {
  Vocabulary vocab = p.declared;
  std::set<std::string> atoms = program_atoms(p.rules);
  for (const auto& wc : p.weak) {
    atoms.insert(wc.pos.begin(), wc.pos.end());
    atoms.insert(wc.neg.begin(), wc.neg.end());
  }
  for (const auto& a : atoms)
    if (!vocab.contains(a)) vocab.add(a, AtomKind::Regular);
  for (const auto& h : head_atoms(p.rules))
    if (vocab.kind_of(h) == AtomKind::Constraint)
      throw SignatureError("constraint atom in rule head: " + h);

  EwSystem sys;
  sys.sense = Sense::Min;
  sys.mode = mode;
  EModule hard;
  hard.kind = LogicKind::Cas;
  hard.vocab = vocab;
  hard.spec = p.spec;
  hard.denot = p.denot;
  hard.program = p.rules;
  hard.mode = mode;
  sys.hard.push_back(std::move(hard));
  return sys;
}

/// Weak constraints range over regular atoms only; each becomes a
/// body-conjunction condition in pl logic.
inline void lower_weak(const CaspProgram& p, EwSystem& sys) {
  const Vocabulary& vocab = sys.hard[0].vocab;
  Vocabulary regular;
  for (const auto& a : vocab.regular_atoms()) regular.add(a);
  for (const auto& wc : p.weak) {
    EwCondition cond;
    cond.module.kind = LogicKind::Pl;
    cond.module.vocab = regular;
    std::vector<PropFormula> lits;
    auto add = [&](const std::string& a, bool positive) {
      if (vocab.kind_of(a) == AtomKind::Constraint)
        throw SignatureError("constraint atom in weak-constraint body: " + a);
      PropFormula f = PropFormula::atom(a);
      lits.push_back(positive ? f : PropFormula::negate(f));
    };
    for (const auto& a : wc.pos) add(a, true);
    for (const auto& a : wc.neg) add(a, false);
    cond.module.formulas.push_back(
        lits.size() == 1 ? lits[0] : PropFormula::conj(std::move(lits)));
    cond.weight = wc.weight;
    cond.level = wc.level;
    sys.soft.push_back(std::move(cond));
  }
}

}  // namespace detail

/// Generation one: weak constraints over regular atoms, no objective
/// statements; min-optimal models.
inline EwSystem lower_casp_weak(const CaspProgram& p,
                                AtomMode mode = AtomMode::Strict) {
  if (!p.objectives.empty())
    throw SignatureError("$minimize is not part of the weak-constraint dialect");
  EwSystem sys = detail::casp_base(p, mode);
  detail::lower_weak(p, sys);
  return sys;
}

/// Generation two: $minimize lists bare variables; the objective becomes
/// one zero-weight condition with unit coefficients over those variables.
/// Min-optimal extended models.
inline EwSystem lower_casp_vars(const CaspProgram& p,
                                AtomMode mode = AtomMode::Strict) {
  EwSystem sys = detail::casp_base(p, mode);
  detail::lower_weak(p, sys);
  if (p.objectives.empty()) return sys;
  Specification obj_spec;
  std::map<std::string, Rational> coeffs;
  for (const auto& term : p.objectives) {
    if (term.has_level || term.constant != 0 || term.coeffs.size() != 1 ||
        term.coeffs.begin()->second != 1)
      throw ParseError(term.lineno,
                       "this dialect's $minimize takes bare variables");
    const std::string& v = term.coeffs.begin()->first;
    if (!p.spec.contains(v))
      throw ParseError(term.lineno, "undeclared variable: " + v);
    if (!obj_spec.contains(v)) obj_spec.add(v, p.spec.domain_of(v));
    coeffs[v] = Rational(1);
  }
  EwCondition cond;
  cond.module = universal_module(Vocabulary{}, std::move(obj_spec));
  cond.weight = 0;
  cond.coeffs = std::move(coeffs);
  sys.soft.push_back(std::move(cond));
  return sys;
}

/// Generation three: $minimize elements are leveled linear terms b*x + c.
/// Per level, the constants add up into one weighted condition and the
/// variable terms into one coefficient condition.  A variable may appear
/// at most once per level.
inline EwSystem lower_casp_linear(const CaspProgram& p,
                                  AtomMode mode = AtomMode::Strict) {
  EwSystem sys = detail::casp_base(p, mode);
  detail::lower_weak(p, sys);
  std::map<int, std::int64_t> level_weight;
  std::map<int, std::map<std::string, std::int64_t>> level_coeffs;
  std::set<int> seen_levels;
  for (const auto& term : p.objectives) {
    seen_levels.insert(term.level);
    level_weight[term.level] += term.constant;
    for (const auto& [v, b] : term.coeffs) {
      if (!p.spec.contains(v))
        throw ParseError(term.lineno, "undeclared variable: " + v);
      if (level_coeffs[term.level].count(v))
        throw ParseError(term.lineno, "variable " + v +
                                          " occurs twice at level " +
                                          std::to_string(term.level));
      level_coeffs[term.level][v] = b;
    }
  }
  for (int l : seen_levels) {
    EwCondition wcond;
    wcond.module = universal_module(Vocabulary{}, Specification{});
    wcond.weight = level_weight[l];
    wcond.level = l;
    sys.soft.push_back(std::move(wcond));

    const auto& coeffs = level_coeffs[l];
    if (coeffs.empty()) continue;
    Specification obj_spec;
    EwCondition ccond;
    for (const auto& [v, b] : coeffs) obj_spec.add(v, p.spec.domain_of(v));
    ccond.module = universal_module(Vocabulary{}, std::move(obj_spec));
    ccond.weight = 0;
    ccond.level = l;
    for (const auto& [v, b] : coeffs) ccond.coeffs[v] = Rational(b);
    sys.soft.push_back(std::move(ccond));
  }
  return sys;
}

}  // namespace ews::frontends
