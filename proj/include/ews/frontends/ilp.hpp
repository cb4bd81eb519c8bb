#pragma once

#include <map>
#include <string>
#include <vector>

#include "ews/system.hpp"
#include "ews/textparse.hpp"

namespace ews::frontends {

/// maximize c.x subject to linear rows over nonnegative bounded integers.
struct IlpProblem {
  std::map<std::string, std::int64_t> objective;
  std::vector<LinearConstraint> rows;
  std::map<std::string, std::pair<std::int64_t, std::int64_t>> bounds;
};

/// Format:
///   maximize x + 2*y
///   subject to
///   x + y <= 3
///   bounds x 0 3
/// Every variable needs an explicit finite upper bound; enumerating all
/// of Z+ is not possible.
inline IlpProblem parse_ilp(const std::string& text) {
  IlpProblem p;
  bool seen_objective = false;
  bool in_rows = false;
  for (const auto& [lineno, line] : text::logical_lines(text, "#")) {
    text::Cursor c(line, lineno);
    if (c.try_consume("maximize")) {
      std::map<std::string, std::int64_t> coeffs;
      std::int64_t constant = 0;
      text::parse_linear_side(c, coeffs, constant, +1);
      if (constant != 0) c.fail("objective must not carry a constant term");
      p.objective = std::move(coeffs);
      seen_objective = true;
    } else if (c.try_consume("subject")) {
      c.expect("to");
      in_rows = true;
    } else if (c.try_consume("bounds")) {
      std::string v = c.ident();
      std::int64_t lo = c.integer();
      std::int64_t hi = c.integer();
      if (lo < 0) c.fail("lower bound must be nonnegative");
      if (lo > hi) c.fail("empty bounds");
      p.bounds[v] = {lo, hi};
    } else if (in_rows) {
      p.rows.push_back(text::parse_linear_constraint(c));
    } else {
      c.fail("expected maximize, subject to, or bounds");
    }
    if (!c.at_end()) c.fail("trailing input");
  }
  if (!seen_objective) throw ParseError(1, "missing maximize statement");
  return p;
}

/// Hard: nonnegative I-CSP module of the rows.  Soft: a single
/// zero-weight condition carrying the objective coefficients.
/// Max-optimal extended models are the IL-program solutions.
inline EwSystem lower_ilp(const IlpProblem& p) {
  Specification spec;
  auto require_bounds = [&](const std::string& v) {
    if (spec.contains(v)) return;
    auto it = p.bounds.find(v);
    if (it == p.bounds.end())
      throw SignatureError(
          "variable " + v +
          " has no bounds; every variable needs 'bounds <var> <lo> <hi>' "
          "with a finite upper bound");
    spec.add_range(v, it->second.first, it->second.second);
  };
  for (const auto& [v, b] : p.objective) require_bounds(v);
  for (const auto& row : p.rows)
    for (const auto& [b, v] : row.terms) require_bounds(v);
  for (const auto& [v, b] : p.bounds) require_bounds(v);

  EwSystem sys;
  sys.sense = Sense::Max;
  EModule hard;
  hard.kind = LogicKind::Icsp;
  hard.spec = spec;
  for (const auto& row : p.rows) hard.constraints.push_back(row);
  sys.hard.push_back(std::move(hard));

  EwCondition cond;
  cond.module = universal_module(Vocabulary{}, spec);
  cond.weight = 0;
  for (const auto& [v, b] : p.objective)
    if (b != 0) cond.coeffs[v] = Rational(b);
  sys.soft.push_back(std::move(cond));
  return sys;
}

}  // namespace ews::frontends
