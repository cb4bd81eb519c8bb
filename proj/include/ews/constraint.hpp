#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "ews/core.hpp"

namespace ews {

enum class Rel { Lt, Gt, Le, Ge, Eq, Ne };

inline Rel flip_rel(Rel r) {
  switch (r) {
    case Rel::Lt: return Rel::Ge;
    case Rel::Gt: return Rel::Le;
    case Rel::Le: return Rel::Gt;
    case Rel::Ge: return Rel::Lt;
    case Rel::Eq: return Rel::Ne;
    case Rel::Ne: return Rel::Eq;
  }
  return Rel::Eq;  // unreachable
}

inline const char* rel_str(Rel r) {
  switch (r) {
    case Rel::Lt: return "<";
    case Rel::Gt: return ">";
    case Rel::Le: return "<=";
    case Rel::Ge: return ">=";
    case Rel::Eq: return "=";
    case Rel::Ne: return "!=";
  }
  return "?";
}

/// sum(coeff_i * x_i) rel rhs.
struct LinearConstraint {
  std::vector<std::pair<std::int64_t, std::string>> terms;
  Rel rel = Rel::Le;
  std::int64_t rhs = 0;

  bool operator==(const LinearConstraint& o) const {
    return terms == o.terms && rel == o.rel && rhs == o.rhs;
  }
};

/// Explicit relation <t, R>: the listed tuples are the satisfying ones.
struct ExtensionalConstraint {
  std::vector<std::string> tuple;
  std::set<std::vector<std::int64_t>> allowed;

  bool operator==(const ExtensionalConstraint& o) const {
    return tuple == o.tuple && allowed == o.allowed;
  }
};

using Constraint = std::variant<LinearConstraint, ExtensionalConstraint>;

/// Mapping from constraint atoms to constraints (the denotation gamma).
using Denotation = std::map<std::string, Constraint>;

inline std::vector<std::string> constraint_variables(const Constraint& c) {
  std::vector<std::string> out;
  if (const auto* lin = std::get_if<LinearConstraint>(&c)) {
    for (const auto& [b, x] : lin->terms) out.push_back(x);
  } else {
    out = std::get<ExtensionalConstraint>(c).tuple;
  }
  return out;
}

inline bool satisfies_constraint(const Evaluation& eval, const Constraint& c) {
  if (const auto* lin = std::get_if<LinearConstraint>(&c)) {
    std::int64_t lhs = 0;
    for (const auto& [b, x] : lin->terms) {
      auto it = eval.find(x);
      if (it == eval.end())
        throw SignatureError("variable not in evaluation: " + x);
      lhs += b * it->second;
    }
    switch (lin->rel) {
      case Rel::Lt: return lhs < lin->rhs;
      case Rel::Gt: return lhs > lin->rhs;
      case Rel::Le: return lhs <= lin->rhs;
      case Rel::Ge: return lhs >= lin->rhs;
      case Rel::Eq: return lhs == lin->rhs;
      case Rel::Ne: return lhs != lin->rhs;
    }
    return false;
  }
  const auto& ext = std::get<ExtensionalConstraint>(c);
  std::vector<std::int64_t> point;
  point.reserve(ext.tuple.size());
  for (const auto& x : ext.tuple) {
    auto it = eval.find(x);
    if (it == eval.end()) throw SignatureError("variable not in evaluation: " + x);
    point.push_back(it->second);
  }
  return ext.allowed.count(point) != 0;
}

/// The dual constraint: satisfied exactly when `c` is not, relative to
/// the finite domains in `spec`.  Linear constraints flip their relation;
/// extensional ones take D^k minus the allowed tuples.
inline Constraint complement_constraint(const Constraint& c,
                                        const Specification& spec) {
  if (const auto* lin = std::get_if<LinearConstraint>(&c)) {
    LinearConstraint out = *lin;
    out.rel = flip_rel(lin->rel);
    return out;
  }
  const auto& ext = std::get<ExtensionalConstraint>(c);
  ExtensionalConstraint out;
  out.tuple = ext.tuple;
  Specification sub;
  for (const auto& x : ext.tuple) sub.add(x, spec.domain_of(x));
  for_each_evaluation(sub, [&](const Evaluation& e) {
    std::vector<std::int64_t> point;
    for (const auto& x : ext.tuple) point.push_back(e.at(x));
    if (!ext.allowed.count(point)) out.allowed.insert(point);
  });
  return out;
}

}  // namespace ews
