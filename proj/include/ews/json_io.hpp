#pragma once

#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "ews/system.hpp"
#include "ews/textparse.hpp"

namespace ews::io {

using nlohmann::json;
using nlohmann::ordered_json;

inline constexpr const char* kFormatVersion = "ews/1";

// ---------------------------------------------------------------- writing

inline ordered_json formula_to_json(const PropFormula& f) {
  ordered_json j;
  switch (f.op) {
    case PropFormula::Op::Atom:
      j["op"] = "atom";
      j["name"] = f.name;
      return j;
    case PropFormula::Op::Not: j["op"] = "not"; break;
    case PropFormula::Op::And: j["op"] = "and"; break;
    case PropFormula::Op::Or: j["op"] = "or"; break;
    case PropFormula::Op::Implies: j["op"] = "implies"; break;
  }
  j["kids"] = ordered_json::array();
  for (const auto& k : f.kids) j["kids"].push_back(formula_to_json(k));
  return j;
}

inline ordered_json constraint_to_json(const Constraint& c) {
  ordered_json j;
  if (const auto* lin = std::get_if<LinearConstraint>(&c)) {
    j["type"] = "linear";
    j["terms"] = ordered_json::array();
    for (const auto& [b, v] : lin->terms)
      j["terms"].push_back(ordered_json::array({b, v}));
    j["rel"] = rel_str(lin->rel);
    j["rhs"] = lin->rhs;
  } else {
    const auto& ext = std::get<ExtensionalConstraint>(c);
    j["type"] = "table";
    j["tuple"] = ext.tuple;
    j["rows"] = ordered_json::array();
    for (const auto& row : ext.allowed) j["rows"].push_back(row);
  }
  return j;
}

inline ordered_json rule_to_json(const Rule& r) {
  ordered_json j;
  if (r.head) j["head"] = *r.head;
  else j["head"] = nullptr;
  j["pos"] = r.pos;
  j["neg"] = r.neg;
  return j;
}

inline ordered_json module_to_json(const EModule& m) {
  ordered_json j;
  j["logic"] = logic_str(m.kind);
  j["atoms"] = m.vocab.atoms;
  j["variables"] = m.spec.variables;
  if (m.complemented) j["complemented"] = true;
  if (!m.formulas.empty()) {
    j["formulas"] = ordered_json::array();
    for (const auto& f : m.formulas) j["formulas"].push_back(formula_to_json(f));
  }
  if (!m.program.empty()) {
    j["rules"] = ordered_json::array();
    for (const auto& r : m.program) j["rules"].push_back(rule_to_json(r));
  }
  if (!m.constraints.empty()) {
    j["constraints"] = ordered_json::array();
    for (const auto& c : m.constraints)
      j["constraints"].push_back(constraint_to_json(c));
  }
  return j;
}

/// Whole-document serialization.  The top level carries the shared
/// signature (atom kinds, variable domains, the denotation); modules
/// reference atoms and variables by name.
inline ordered_json system_to_json(const EwSystem& sys) {
  Vocabulary vocab;
  Specification spec;
  Denotation denot;
  auto absorb = [&](const EModule& m) {
    vocab.merge(m.vocab);
    spec.merge(m.spec);
    for (const auto& [a, c] : m.denot) {
      auto it = denot.find(a);
      if (it == denot.end()) denot.emplace(a, c);
      else if (!(it->second == c))
        throw SignatureError("modules disagree on denotation of: " + a);
    }
  };
  for (const auto& m : sys.hard) absorb(m);
  for (const auto& cond : sys.soft) absorb(cond.module);

  ordered_json j;
  j["version"] = kFormatVersion;
  j["sense"] = sense_str(sys.sense);
  j["mode"] = sys.mode == AtomMode::Strict ? "strict" : "nonstrict";
  j["vocabulary"] = ordered_json::array();
  for (std::size_t i = 0; i < vocab.size(); ++i)
    j["vocabulary"].push_back(
        {{"name", vocab.atoms[i]},
         {"kind", vocab.kinds[i] == AtomKind::Regular ? "regular" : "constraint"}});
  j["variables"] = ordered_json::object();
  for (std::size_t i = 0; i < spec.size(); ++i)
    j["variables"][spec.variables[i]] = spec.domains[i];
  j["denotation"] = ordered_json::object();
  for (const auto& [a, c] : denot) j["denotation"][a] = constraint_to_json(c);
  j["hard"] = ordered_json::array();
  for (const auto& m : sys.hard) j["hard"].push_back(module_to_json(m));
  j["soft"] = ordered_json::array();
  for (const auto& cond : sys.soft) {
    ordered_json s;
    s["module"] = module_to_json(cond.module);
    s["weight"] = cond.weight;
    s["level"] = cond.level;
    s["coeffs"] = ordered_json::object();
    for (const auto& [v, c] : cond.coeffs) s["coeffs"][v] = c.str();
    j["soft"].push_back(std::move(s));
  }
  return j;
}

inline std::string save_system(const EwSystem& sys, int indent = 2) {
  return system_to_json(sys).dump(indent) + "\n";
}

// ---------------------------------------------------------------- reading

namespace detail {

inline void check_keys(const json& j, const std::set<std::string>& allowed,
                       const std::string& where) {
  if (!j.is_object()) throw ParseError(1, where + ": expected an object");
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k))
      throw ParseError(1, where + ": unknown field '" + k + "'");
}

inline Rel rel_from_str(const std::string& s) {
  if (s == "<") return Rel::Lt;
  if (s == ">") return Rel::Gt;
  if (s == "<=") return Rel::Le;
  if (s == ">=") return Rel::Ge;
  if (s == "=") return Rel::Eq;
  if (s == "!=") return Rel::Ne;
  throw ParseError(1, "unknown relation: " + s);
}

inline LogicKind logic_from_str(const std::string& s) {
  for (LogicKind k :
       {LogicKind::Pl, LogicKind::Sat, LogicKind::Lp, LogicKind::Ilp,
        LogicKind::Icsp, LogicKind::Smt, LogicKind::Rsmt, LogicKind::Cas,
        LogicKind::Universal})
    if (s == logic_str(k)) return k;
  throw ParseError(1, "unknown logic: " + s);
}

}  // namespace detail

inline PropFormula formula_from_json(const json& j) {
  detail::check_keys(j, {"op", "name", "kids"}, "formula");
  std::string op = j.at("op").get<std::string>();
  if (op == "atom") return PropFormula::atom(j.at("name").get<std::string>());
  std::vector<PropFormula> kids;
  for (const auto& k : j.at("kids")) kids.push_back(formula_from_json(k));
  if (op == "not") {
    if (kids.size() != 1) throw ParseError(1, "'not' takes one operand");
    return PropFormula::negate(std::move(kids[0]));
  }
  if (op == "and") return PropFormula::conj(std::move(kids));
  if (op == "or") return PropFormula::disj(std::move(kids));
  if (op == "implies") {
    if (kids.size() != 2) throw ParseError(1, "'implies' takes two operands");
    return PropFormula::implies(std::move(kids[0]), std::move(kids[1]));
  }
  throw ParseError(1, "unknown formula op: " + op);
}

inline Constraint constraint_from_json(const json& j) {
  std::string type = j.at("type").get<std::string>();
  if (type == "linear") {
    detail::check_keys(j, {"type", "terms", "rel", "rhs"}, "constraint");
    LinearConstraint lin;
    for (const auto& t : j.at("terms"))
      lin.terms.push_back({t.at(0).get<std::int64_t>(),
                           t.at(1).get<std::string>()});
    lin.rel = detail::rel_from_str(j.at("rel").get<std::string>());
    lin.rhs = j.at("rhs").get<std::int64_t>();
    return lin;
  }
  if (type == "table") {
    detail::check_keys(j, {"type", "tuple", "rows"}, "constraint");
    ExtensionalConstraint ext;
    ext.tuple = j.at("tuple").get<std::vector<std::string>>();
    for (const auto& row : j.at("rows")) {
      auto point = row.get<std::vector<std::int64_t>>();
      if (point.size() != ext.tuple.size())
        throw ParseError(1, "table row arity mismatch");
      ext.allowed.insert(std::move(point));
    }
    return ext;
  }
  throw ParseError(1, "unknown constraint type: " + type);
}

inline Rule rule_from_json(const json& j) {
  detail::check_keys(j, {"head", "pos", "neg"}, "rule");
  Rule r;
  if (!j.at("head").is_null()) r.head = j.at("head").get<std::string>();
  r.pos = j.at("pos").get<std::vector<std::string>>();
  r.neg = j.at("neg").get<std::vector<std::string>>();
  return r;
}

inline EModule module_from_json(const json& j, const Vocabulary& vocab,
                                const Specification& spec,
                                const Denotation& denot, AtomMode mode) {
  detail::check_keys(
      j, {"logic", "atoms", "variables", "complemented", "formulas", "rules",
          "constraints"},
      "module");
  EModule m;
  m.kind = detail::logic_from_str(j.at("logic").get<std::string>());
  m.mode = mode;
  for (const auto& a : j.at("atoms")) {
    std::string name = a.get<std::string>();
    if (!vocab.contains(name))
      throw ParseError(1, "module atom not in document vocabulary: " + name);
    m.vocab.add(name, vocab.kind_of(name));
    auto it = denot.find(name);
    if (it != denot.end()) m.denot.emplace(name, it->second);
  }
  for (const auto& v : j.at("variables")) {
    std::string name = v.get<std::string>();
    if (!spec.contains(name))
      throw ParseError(1, "module variable not in document variables: " + name);
    m.spec.add(name, spec.domain_of(name));
  }
  if (j.contains("complemented")) m.complemented = j.at("complemented").get<bool>();
  if (j.contains("formulas"))
    for (const auto& f : j.at("formulas"))
      m.formulas.push_back(formula_from_json(f));
  if (j.contains("rules"))
    for (const auto& r : j.at("rules")) m.program.push_back(rule_from_json(r));
  if (j.contains("constraints"))
    for (const auto& c : j.at("constraints"))
      m.constraints.push_back(constraint_from_json(c));
  return m;
}

inline EwSystem system_from_json(const json& j) {
  detail::check_keys(j,
                     {"version", "sense", "mode", "vocabulary", "variables",
                      "denotation", "hard", "soft"},
                     "document");
  std::string version = j.at("version").get<std::string>();
  if (version != kFormatVersion)
    throw ParseError(1, "unsupported document version: " + version);

  EwSystem sys;
  std::string sense = j.at("sense").get<std::string>();
  if (sense == "max") sys.sense = Sense::Max;
  else if (sense == "min") sys.sense = Sense::Min;
  else throw ParseError(1, "sense must be 'max' or 'min'");
  std::string mode = j.at("mode").get<std::string>();
  if (mode == "strict") sys.mode = AtomMode::Strict;
  else if (mode == "nonstrict") sys.mode = AtomMode::NonStrict;
  else throw ParseError(1, "mode must be 'strict' or 'nonstrict'");

  Vocabulary vocab;
  for (const auto& a : j.at("vocabulary")) {
    detail::check_keys(a, {"name", "kind"}, "vocabulary entry");
    std::string kind = a.at("kind").get<std::string>();
    if (kind != "regular" && kind != "constraint")
      throw ParseError(1, "atom kind must be 'regular' or 'constraint'");
    vocab.add(a.at("name").get<std::string>(),
              kind == "regular" ? AtomKind::Regular : AtomKind::Constraint);
  }
  Specification spec;
  for (const auto& [name, domain] : j.at("variables").items())
    spec.add(name, domain.get<std::vector<std::int64_t>>());
  Denotation denot;
  for (const auto& [name, c] : j.at("denotation").items()) {
    if (!vocab.contains(name) || vocab.kind_of(name) != AtomKind::Constraint)
      throw ParseError(1, "denotation key is not a constraint atom: " + name);
    for (const auto& v : constraint_variables(constraint_from_json(c)))
      if (!spec.contains(v))
        throw ParseError(1, "denotation of " + name +
                                " uses unknown variable: " + v);
    denot.emplace(name, constraint_from_json(c));
  }

  for (const auto& m : j.at("hard"))
    sys.hard.push_back(module_from_json(m, vocab, spec, denot, sys.mode));
  for (const auto& s : j.at("soft")) {
    detail::check_keys(s, {"module", "weight", "level", "coeffs"},
                       "soft condition");
    EwCondition cond;
    cond.module = module_from_json(s.at("module"), vocab, spec, denot, sys.mode);
    cond.weight = s.at("weight").get<std::int64_t>();
    cond.level = s.at("level").get<int>();
    for (const auto& [v, c] : s.at("coeffs").items())
      cond.coeffs[v] = Rational::parse(c.get<std::string>());
    sys.soft.push_back(std::move(cond));
  }

  CoherenceReport report = check_coherence(sys);
  if (!report.ok())
    throw SignatureError("incoherent system:\n" + report.str());
  return sys;
}

inline EwSystem load_system(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(1, std::string("invalid JSON: ") + e.what());
  }
  try {
    return system_from_json(j);
  } catch (const json::exception& e) {
    throw ParseError(1, std::string("malformed document: ") + e.what());
  }
}

}  // namespace ews::io
