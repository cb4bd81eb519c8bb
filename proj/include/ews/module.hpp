#pragma once

#include <set>
#include <string>
#include <vector>

#include "ews/constraint.hpp"
#include "ews/core.hpp"
#include "ews/formula.hpp"
#include "ews/program.hpp"

namespace ews {

enum class LogicKind { Pl, Sat, Lp, Ilp, Icsp, Smt, Rsmt, Cas, Universal };

inline const char* logic_str(LogicKind k) {
  switch (k) {
    case LogicKind::Pl: return "pl";
    case LogicKind::Sat: return "sat";
    case LogicKind::Lp: return "lp";
    case LogicKind::Ilp: return "ilp";
    case LogicKind::Icsp: return "icsp";
    case LogicKind::Smt: return "smt";
    case LogicKind::Rsmt: return "rsmt";
    case LogicKind::Cas: return "cas";
    case LogicKind::Universal: return "universal";
  }
  return "?";
}

/// Strict: false constraint atoms impose the complement constraint.
/// NonStrict: false constraint atoms impose nothing.
enum class AtomMode { Strict, NonStrict };

/// The constraints an interpretation X imposes on evaluations, given the
/// constraint atoms in scope: gamma(a) for members of X, the complement
/// for non-members (strict mode only).
inline std::vector<Constraint> csp_side_condition(
    const std::set<std::string>& atoms_in_scope, const Interpretation& x,
    const Denotation& denot, AtomMode mode, const Specification& spec) {
  std::vector<Constraint> out;
  for (const auto& a : atoms_in_scope) {
    auto it = denot.find(a);
    if (it == denot.end())
      throw SignatureError("denotation undefined on constraint atom: " + a);
    if (x.count(a)) {
      out.push_back(it->second);
    } else if (mode == AtomMode::Strict) {
      out.push_back(complement_constraint(it->second, spec));
    }
  }
  return out;
}

/// A theory in one concrete extended logic together with its signature.
/// Membership of an extended interpretation is decided structurally from
/// the stored theory; `complemented` flips it pointwise (the semantic
/// complement over the same finite signature).
struct EModule {
  LogicKind kind = LogicKind::Universal;
  Vocabulary vocab;
  Specification spec;
  Denotation denot;                    // smt / rsmt / cas
  std::vector<PropFormula> formulas;   // pl / sat / smt / rsmt
  LogicProgram program;                // lp / ilp / cas
  std::vector<Constraint> constraints; // icsp
  AtomMode mode = AtomMode::Strict;
  bool complemented = false;

  /// Membership for (I, nu) already over this module's signature.
  bool member(const Interpretation& interp, const Evaluation& eval) const {
    return base_member(interp, eval) != complemented;
  }

  /// Membership with projection from a wider signature.
  bool member_projected(const Interpretation& interp,
                        const Evaluation& eval) const {
    return member(project_interpretation(interp, vocab),
                  project_evaluation(eval, spec.variables));
  }

  /// I is a model when some evaluation makes (I, nu) a member; decided by
  /// an existential sweep over the module's own evaluation space.
  bool is_model(const Interpretation& interp,
                std::uint64_t cap = kDefaultStateCap) const {
    Interpretation proj = project_interpretation(interp, vocab);
    std::uint64_t n = evaluation_count(spec, cap);
    for (std::uint64_t e = 0; e < n; ++e)
      if (member(proj, evaluation_from_index(spec, e))) return true;
    return false;
  }

private:
  bool base_member(const Interpretation& interp, const Evaluation& eval) const {
    switch (kind) {
      case LogicKind::Universal:
        return true;
      case LogicKind::Pl:
      case LogicKind::Sat:
        for (const auto& f : formulas)
          if (!f.eval(interp)) return false;
        return true;
      case LogicKind::Lp:
        return is_answer_set(program, interp);
      case LogicKind::Ilp:
        return is_input_answer_set(program, vocab.atoms, interp);
      case LogicKind::Icsp: {
        if (!interp.empty()) return false;
        for (const auto& c : constraints)
          if (!satisfies_constraint(eval, c)) return false;
        return true;
      }
      case LogicKind::Smt:
      case LogicKind::Rsmt: {
        for (const auto& f : formulas)
          if (!f.eval(interp)) return false;
        return side_condition_holds(smt_scope(), interp, eval);
      }
      case LogicKind::Cas: {
        auto regular_vec = vocab.regular_atoms();
        std::set<std::string> regular(regular_vec.begin(), regular_vec.end());
        auto heads = head_atoms(program);
        for (const auto& a : interp)
          if (regular.count(a) && !heads.count(a)) return false;
        if (!is_input_answer_set(program, vocab.atoms, interp)) return false;
        auto scope_vec = vocab.constraint_atoms();
        std::set<std::string> scope(scope_vec.begin(), scope_vec.end());
        return side_condition_holds(scope, interp, eval);
      }
    }
    return false;
  }

  /// Constraint atoms occurring in the stored formulas.
  std::set<std::string> smt_scope() const {
    std::set<std::string> scope;
    for (const auto& a : formula_atoms(formulas))
      if (vocab.contains(a) && vocab.kind_of(a) == AtomKind::Constraint)
        scope.insert(a);
    return scope;
  }

  bool side_condition_holds(const std::set<std::string>& scope,
                            const Interpretation& interp,
                            const Evaluation& eval) const {
    for (const auto& c : csp_side_condition(scope, interp, denot, mode, spec))
      if (!satisfies_constraint(eval, c)) return false;
    return true;
  }
};

/// Module whose members are all of Int(sigma, V, D).
inline EModule universal_module(Vocabulary vocab, Specification spec) {
  EModule m;
  m.kind = LogicKind::Universal;
  m.vocab = std::move(vocab);
  m.spec = std::move(spec);
  return m;
}

inline bool is_cas_extended_answer_set(const EModule& cas_module,
                                       const Interpretation& interp,
                                       const Evaluation& eval) {
  return cas_module.member(interp, eval);
}

inline bool is_smt_extended_model(const EModule& smt_module,
                                  const Interpretation& interp,
                                  const Evaluation& eval) {
  return smt_module.member(interp, eval);
}

inline bool is_icsp_solution(const EModule& icsp_module, const Evaluation& eval) {
  return icsp_module.member(Interpretation{}, eval);
}

}  // namespace ews
