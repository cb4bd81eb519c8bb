#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ews/core.hpp"

namespace ews {

/// head :- pos, not neg.  An absent head is the falsum constraint rule.
struct Rule {
  std::optional<std::string> head;
  std::vector<std::string> pos;
  std::vector<std::string> neg;

  bool operator==(const Rule& o) const {
    return head == o.head && pos == o.pos && neg == o.neg;
  }
};

using LogicProgram = std::vector<Rule>;

inline std::set<std::string> head_atoms(const LogicProgram& prog) {
  std::set<std::string> out;
  for (const auto& r : prog)
    if (r.head) out.insert(*r.head);
  return out;
}

inline std::set<std::string> program_atoms(const LogicProgram& prog) {
  std::set<std::string> out;
  for (const auto& r : prog) {
    if (r.head) out.insert(*r.head);
    out.insert(r.pos.begin(), r.pos.end());
    out.insert(r.neg.begin(), r.neg.end());
  }
  return out;
}

/// Implication reading: body satisfied and head false (or falsum) fails.
inline bool satisfies_rule(const Interpretation& x, const Rule& r) {
  for (const auto& a : r.pos)
    if (!x.count(a)) return true;
  for (const auto& a : r.neg)
    if (x.count(a)) return true;
  return r.head && x.count(*r.head);
}

inline bool satisfies_program(const Interpretation& x, const LogicProgram& prog) {
  return std::all_of(prog.begin(), prog.end(),
                     [&](const Rule& r) { return satisfies_rule(x, r); });
}

/// Rules blocked by X (negative body intersects X) are dropped, the rest
/// keep only their positive bodies.
inline LogicProgram reduct(const LogicProgram& prog, const Interpretation& x) {
  LogicProgram out;
  for (const auto& r : prog) {
    bool blocked = std::any_of(r.neg.begin(), r.neg.end(),
                               [&](const std::string& a) { return x.count(a); });
    if (blocked) continue;
    out.push_back(Rule{r.head, r.pos, {}});
  }
  return out;
}

/// Least fixpoint of the one-step consequence of a positive program.
/// Falsum-headed rules derive nothing; callers check them separately.
inline Interpretation least_model_positive(const LogicProgram& prog) {
  Interpretation model;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : prog) {
      if (!r.head || model.count(*r.head)) continue;
      bool fires = std::all_of(r.pos.begin(), r.pos.end(),
                               [&](const std::string& a) { return model.count(a); });
      if (fires) {
        model.insert(*r.head);
        changed = true;
      }
    }
  }
  return model;
}

inline bool is_answer_set(const LogicProgram& prog, const Interpretation& x) {
  if (!satisfies_program(x, prog)) return false;
  return least_model_positive(reduct(prog, x)) == x;
}

/// X is an answer set of prog extended with the atoms of X outside hd(prog)
/// added as facts.
inline bool is_input_answer_set(const LogicProgram& prog,
                                const std::vector<std::string>& vocab_atoms,
                                const Interpretation& x) {
  for (const auto& a : x)
    if (std::find(vocab_atoms.begin(), vocab_atoms.end(), a) ==
        vocab_atoms.end())
      throw SignatureError("input answer set candidate outside vocabulary: " + a);
  LogicProgram extended = prog;
  auto heads = head_atoms(prog);
  for (const auto& a : x)
    if (!heads.count(a)) extended.push_back(Rule{a, {}, {}});
  return is_answer_set(extended, x);
}

}  // namespace ews
