#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "ews/core.hpp"

namespace ews {

/// Propositional formula tree over named atoms.
struct PropFormula {
  enum class Op { Atom, Not, And, Or, Implies };

  Op op = Op::Atom;
  std::string name;                 // Op::Atom only
  std::vector<PropFormula> kids;    // 1 for Not, >=0 for And/Or, 2 for Implies

  static PropFormula atom(std::string a) {
    PropFormula f;
    f.name = std::move(a);
    return f;
  }
  static PropFormula negate(PropFormula f) {
    PropFormula out;
    out.op = Op::Not;
    out.kids.push_back(std::move(f));
    return out;
  }
  static PropFormula conj(std::vector<PropFormula> kids) {
    PropFormula out;
    out.op = Op::And;
    out.kids = std::move(kids);
    return out;
  }
  static PropFormula disj(std::vector<PropFormula> kids) {
    PropFormula out;
    out.op = Op::Or;
    out.kids = std::move(kids);
    return out;
  }
  static PropFormula implies(PropFormula a, PropFormula b) {
    PropFormula out;
    out.op = Op::Implies;
    out.kids.push_back(std::move(a));
    out.kids.push_back(std::move(b));
    return out;
  }
  /// Positive or negated atom.
  static PropFormula literal(const std::string& a, bool positive) {
    return positive ? atom(a) : negate(atom(a));
  }

  bool operator==(const PropFormula& o) const {
    return op == o.op && name == o.name && kids == o.kids;
  }

  /// Classical evaluation; atoms in I are true, all others false.
  bool eval(const Interpretation& interp) const {
    switch (op) {
      case Op::Atom: return interp.count(name) != 0;
      case Op::Not: return !kids[0].eval(interp);
      case Op::And:
        for (const auto& k : kids)
          if (!k.eval(interp)) return false;
        return true;
      case Op::Or:
        for (const auto& k : kids)
          if (k.eval(interp)) return true;
        return false;
      case Op::Implies: return !kids[0].eval(interp) || kids[1].eval(interp);
    }
    return false;
  }

  void collect_atoms(std::set<std::string>& out) const {
    if (op == Op::Atom) {
      out.insert(name);
      return;
    }
    for (const auto& k : kids) k.collect_atoms(out);
  }

  bool is_literal() const {
    return op == Op::Atom || (op == Op::Not && kids[0].op == Op::Atom);
  }
  /// Disjunction of literals (a bare literal counts as a unit clause).
  bool is_clause() const {
    if (is_literal()) return true;
    if (op != Op::Or) return false;
    for (const auto& k : kids)
      if (!k.is_literal()) return false;
    return true;
  }
  /// Conjunction of literals (a bare literal counts).
  bool is_literal_conjunction() const {
    if (is_literal()) return true;
    if (op != Op::And) return false;
    for (const auto& k : kids)
      if (!k.is_literal()) return false;
    return true;
  }

  std::string str() const {
    switch (op) {
      case Op::Atom: return name;
      case Op::Not: return "not " + kids[0].wrapped();
      case Op::And: return join(" and ");
      case Op::Or: return join(" or ");
      case Op::Implies: return kids[0].wrapped() + " -> " + kids[1].wrapped();
    }
    return "?";
  }

private:
  std::string wrapped() const {
    if (op == Op::Atom) return name;
    return "(" + str() + ")";
  }
  std::string join(const std::string& sep) const {
    std::string out;
    for (std::size_t i = 0; i < kids.size(); ++i) {
      if (i) out += sep;
      out += kids[i].wrapped();
    }
    return out;
  }
};

inline std::set<std::string> formula_atoms(const std::vector<PropFormula>& fs) {
  std::set<std::string> out;
  for (const auto& f : fs) f.collect_atoms(out);
  return out;
}

}  // namespace ews
