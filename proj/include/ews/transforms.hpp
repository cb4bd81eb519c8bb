#pragma once

#include <map>
#include <string>
#include <vector>

#include "ews/system.hpp"

namespace ews {

struct TransformReport {
  std::string transform;
  std::vector<std::string> rewrites;  // one entry per touched condition
};

/// Levels remapped order-preservingly onto 1..|levels(W)|.
inline EwSystem normalize_levels(const EwSystem& sys,
                                 TransformReport* report = nullptr) {
  auto ls = levels(sys);
  std::map<int, int> remap;
  for (std::size_t i = 0; i < ls.size(); ++i) remap[ls[i]] = int(i) + 1;
  EwSystem out = sys;
  for (auto& cond : out.soft) {
    if (report && cond.level != remap[cond.level])
      report->rewrites.push_back("level " + std::to_string(cond.level) + " -> " +
                                 std::to_string(remap[cond.level]));
    cond.level = remap[cond.level];
  }
  if (report) report->transform = "normalize-levels";
  return out;
}

/// Negates all weights; swaps max and min optima for plain models.
inline EwSystem star(const EwSystem& sys) {
  EwSystem out = sys;
  for (auto& cond : out.soft) cond.weight = -cond.weight;
  return out;
}

/// Negates weights and coefficients; swaps max and min optima for
/// extended models.
inline EwSystem star_star(const EwSystem& sys) {
  EwSystem out = sys;
  for (auto& cond : out.soft) {
    cond.weight = -cond.weight;
    for (auto& [v, c] : cond.coeffs) c = -c;
  }
  return out;
}

/// Semantic complement: membership negated pointwise over the same
/// signature.
inline EModule complement_module(const EModule& m) {
  EModule out = m;
  out.complemented = !m.complemented;
  return out;
}

enum class SignElimination {
  DropNegative,          // w >= 0 kept, negative flipped; coefficients kept
  DropPositive,          // w <= 0 kept, positive flipped; coefficients kept
  DropNegativeExtended,  // as DropNegative, flipped conditions also negate c
  DropPositiveExtended,  // as DropPositive, flipped conditions also negate c
};

/// Per-condition rewrite (T,w;c@l) -> (complement(T),-w;...@l) for
/// conditions on the wrong side of zero.  The extended variants also
/// negate the coefficients on flipped conditions and are the only ones
/// that preserve extended optima.
inline EwSystem eliminate_weights_by_sign(const EwSystem& sys,
                                          SignElimination variant,
                                          TransformReport* report = nullptr) {
  bool drop_negative = variant == SignElimination::DropNegative ||
                       variant == SignElimination::DropNegativeExtended;
  bool negate_coeffs = variant == SignElimination::DropNegativeExtended ||
                       variant == SignElimination::DropPositiveExtended;
  EwSystem out = sys;
  for (std::size_t i = 0; i < out.soft.size(); ++i) {
    auto& cond = out.soft[i];
    bool keep = drop_negative ? cond.weight >= 0 : cond.weight <= 0;
    if (keep) continue;
    cond.module = complement_module(cond.module);
    cond.weight = -cond.weight;
    if (negate_coeffs)
      for (auto& [v, c] : cond.coeffs) c = -c;
    if (report)
      report->rewrites.push_back("condition " + std::to_string(i) +
                                 ": complemented module, weight negated" +
                                 (negate_coeffs ? ", coefficients negated" : ""));
  }
  if (report)
    report->transform = drop_negative ? (negate_coeffs ? "elim-neg-ext" : "elim-neg")
                                      : (negate_coeffs ? "elim-pos-ext" : "elim-pos");
  return out;
}

inline bool all_coeffs_zero(const EwCondition& cond) {
  for (const auto& [v, c] : cond.coeffs)
    if (!c.is_zero()) return false;
  return true;
}

/// Drops every condition whose weight is 0; preserves plain optima
/// (coefficients never influence plain costs).
inline EwSystem drop_zero_weight(const EwSystem& sys) {
  EwSystem out = sys;
  std::vector<EwCondition> kept;
  for (auto& cond : out.soft)
    if (cond.weight != 0) kept.push_back(cond);
  out.soft = std::move(kept);
  return out;
}

/// Drops conditions of the exact form (T,0@l): weight 0 and all-zero
/// coefficients; preserves extended optima.  A (T,0;c@l) with nonzero c
/// survives.
inline EwSystem drop_inert(const EwSystem& sys) {
  EwSystem out = sys;
  std::vector<EwCondition> kept;
  for (auto& cond : out.soft)
    if (!(cond.weight == 0 && all_coeffs_zero(cond))) kept.push_back(cond);
  out.soft = std::move(kept);
  return out;
}

/// Replaces every (T,w;c@l) with (T,w@l); preserves plain optima.
inline EwSystem zero_coefficients(const EwSystem& sys) {
  EwSystem out = sys;
  for (auto& cond : out.soft) cond.coeffs.clear();
  return out;
}

}  // namespace ews
