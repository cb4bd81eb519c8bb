#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ews/module.hpp"
#include "ews/rational.hpp"

namespace ews {

enum class Sense { Max, Min };

inline const char* sense_str(Sense s) { return s == Sense::Max ? "max" : "min"; }

/// Soft condition (T, w; c @ l): a module, an integer weight, a sparse
/// coefficients mapping over the module's variables, and a level >= 1.
struct EwCondition {
  EModule module;
  std::int64_t weight = 0;
  std::map<std::string, Rational> coeffs;  // absent variable means 0
  int level = 1;
};

/// Hard modular system plus soft ew-conditions.
struct EwSystem {
  std::vector<EModule> hard;
  std::vector<EwCondition> soft;
  AtomMode mode = AtomMode::Strict;
  Sense sense = Sense::Min;
};

/// The combined signature of the hard part: union of vocabularies and
/// variable sets of its modules.
struct SystemSignature {
  Vocabulary vocab;
  Specification spec;
};

inline SystemSignature signature(const EwSystem& sys) {
  SystemSignature sig;
  for (const auto& m : sys.hard) {
    sig.vocab.merge(m.vocab);
    sig.spec.merge(m.spec);
  }
  return sig;
}

struct CoherenceViolation {
  std::string what;
};

struct CoherenceReport {
  std::vector<CoherenceViolation> violations;
  bool ok() const { return violations.empty(); }
  std::string str() const {
    std::string out;
    for (const auto& v : violations) out += v.what + "\n";
    return out;
  }
};

/// Validates pairwise hard-module coherence and, for every soft condition:
/// sigma_T subset of sigma_H, Upsilon_T subset of Upsilon_H, and equal
/// domains on shared variables.
inline CoherenceReport check_coherence(const EwSystem& sys) {
  CoherenceReport report;
  auto note = [&](std::string what) {
    report.violations.push_back({std::move(what)});
  };

  // Pairwise module coherence: shared variables force equal domains.
  for (std::size_t i = 0; i < sys.hard.size(); ++i)
    for (std::size_t j = i + 1; j < sys.hard.size(); ++j)
      for (const auto& v : sys.hard[i].spec.variables)
        if (sys.hard[j].spec.contains(v) &&
            sys.hard[i].spec.domain_of(v) != sys.hard[j].spec.domain_of(v))
          note("hard modules " + std::to_string(i) + " and " +
               std::to_string(j) + " disagree on domain of variable " + v);

  SystemSignature sig;
  try {
    sig = signature(sys);
  } catch (const SignatureError& e) {
    note(std::string("hard signature union failed: ") + e.what());
    return report;
  }

  for (std::size_t k = 0; k < sys.soft.size(); ++k) {
    const auto& cond = sys.soft[k];
    const std::string tag = "soft condition " + std::to_string(k);
    if (cond.level < 1) note(tag + ": level must be positive");
    for (const auto& a : cond.module.vocab.atoms)
      if (!sig.vocab.contains(a))
        note(tag + ": atom " + a + " not in hard vocabulary");
    for (const auto& v : cond.module.spec.variables) {
      if (!sig.spec.contains(v)) {
        note(tag + ": variable " + v + " not in hard variables");
      } else if (sig.spec.domain_of(v) != cond.module.spec.domain_of(v)) {
        note(tag + ": domain of shared variable " + v +
             " differs from hard domain");
      }
    }
    for (const auto& [v, c] : cond.coeffs)
      if (!cond.module.spec.contains(v))
        note(tag + ": coefficient on variable " + v +
             " outside the module's variables");
  }
  return report;
}

/// The weight of B when I is a model of B's module, else 0.
inline std::int64_t cost_model(const Interpretation& interp,
                               const EwCondition& cond,
                               std::uint64_t cap = kDefaultStateCap) {
  return cond.module.is_model(interp, cap) ? cond.weight : 0;
}

/// Sum of nu(x)*c(x) over the module's variables when (I, nu) is an
/// extended model of B's module, else 0.
inline Rational cost_extended(const Interpretation& interp,
                              const Evaluation& eval, const EwCondition& cond) {
  if (!cond.module.member_projected(interp, eval)) return Rational(0);
  Rational total(0);
  for (const auto& [v, c] : cond.coeffs) total += Rational(eval.at(v)) * c;
  return total;
}

inline std::vector<int> levels(const EwSystem& sys) {
  std::vector<int> out;
  for (const auto& cond : sys.soft)
    if (std::find(out.begin(), out.end(), cond.level) == out.end())
      out.push_back(cond.level);
  std::sort(out.begin(), out.end());
  return out;
}

/// Least level greater than l, or nullopt at the greatest level.
inline std::optional<int> succ_level(const EwSystem& sys, int level) {
  auto ls = levels(sys);
  if (std::find(ls.begin(), ls.end(), level) == ls.end())
    throw SignatureError("level not present: " + std::to_string(level));
  auto it = std::upper_bound(ls.begin(), ls.end(), level);
  if (it == ls.end()) return std::nullopt;
  return *it;
}

/// Eq-style plain cost at one level: sum of weights of the level's
/// conditions whose module I models.
inline std::int64_t level_cost(const Interpretation& interp, const EwSystem& sys,
                               int level, std::uint64_t cap = kDefaultStateCap) {
  std::int64_t total = 0;
  for (const auto& cond : sys.soft)
    if (cond.level == level) total += cost_model(interp, cond, cap);
  return total;
}

/// Extended cost at one level: per condition, plain weight cost plus the
/// coefficient dot product.
inline Rational level_cost_extended(const Interpretation& interp,
                                    const Evaluation& eval, const EwSystem& sys,
                                    int level,
                                    std::uint64_t cap = kDefaultStateCap) {
  Rational total(0);
  for (const auto& cond : sys.soft)
    if (cond.level == level)
      total += Rational(cost_model(interp, cond, cap)) +
               cost_extended(interp, eval, cond);
  return total;
}

/// Per-level totals for one candidate, for reporting.
struct CostVector {
  std::map<int, Rational> per_level;
  Sense sense = Sense::Min;
};

/// Conjunction of per-module membership after projection to each module's
/// signature; the empty system is vacuously true.
inline bool holds_eams(const std::vector<EModule>& modules,
                       const Interpretation& interp, const Evaluation& eval) {
  for (const auto& m : modules)
    if (!m.member_projected(interp, eval)) return false;
  return true;
}

}  // namespace ews
