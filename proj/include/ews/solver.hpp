#pragma once

#include <chrono>
#include <cstdint>
#include <thread>
#include <vector>

#include "ews/system.hpp"

namespace ews {

struct SolveOptions {
  std::uint64_t cap = kDefaultStateCap;
  int threads = 1;
};

/// 2^|sigma| * product of domain sizes; errors above the cap.
inline std::uint64_t state_space_size(const EwSystem& sys,
                                      std::uint64_t cap = kDefaultStateCap) {
  auto sig = signature(sys);
  std::uint64_t interps = checked_pow2(sig.vocab.size(), cap);
  std::uint64_t evals = evaluation_count(sig.spec, cap);
  if (evals != 0 && interps > cap / evals)
    throw CapExceeded("state space exceeds cap " + std::to_string(cap));
  return interps * evals;
}

namespace detail {

/// Runs fn(mask) over [0, n) partitioned across opts.threads workers.
/// Each worker appends to its own bucket; buckets are concatenated in
/// partition order, so the merged output equals the single-thread order.
template <typename Item, typename Fn>
std::vector<Item> partitioned_scan(std::uint64_t n, const SolveOptions& opts,
                                   Fn&& fn) {
  int workers = opts.threads < 1 ? 1 : opts.threads;
  if (workers == 1 || n < 2) {
    std::vector<Item> out;
    for (std::uint64_t i = 0; i < n; ++i) fn(i, out);
    return out;
  }
  std::vector<std::vector<Item>> buckets(workers);
  std::vector<std::thread> pool;
  std::uint64_t chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    std::uint64_t lo = chunk * w;
    std::uint64_t hi = std::min(n, lo + chunk);
    pool.emplace_back([&, w, lo, hi] {
      for (std::uint64_t i = lo; i < hi; ++i) fn(i, buckets[w]);
    });
  }
  for (auto& t : pool) t.join();
  std::vector<Item> out;
  for (auto& b : buckets)
    out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace detail

/// All extended models of the hard part, canonical order (interpretation
/// bits ascending, then evaluation index ascending).
inline std::vector<ExtendedInterpretation> enumerate_extended_models(
    const EwSystem& sys, const SolveOptions& opts = {}) {
  state_space_size(sys, opts.cap);
  auto sig = signature(sys);
  std::uint64_t interps = checked_pow2(sig.vocab.size(), opts.cap);
  std::uint64_t evals = evaluation_count(sig.spec, opts.cap);
  return detail::partitioned_scan<ExtendedInterpretation>(
      interps, opts, [&](std::uint64_t mask, auto& out) {
        Interpretation interp = interpretation_from_mask(sig.vocab, mask);
        for (std::uint64_t e = 0; e < evals; ++e) {
          Evaluation eval = evaluation_from_index(sig.spec, e);
          if (holds_eams(sys.hard, interp, eval))
            out.push_back({interp, eval});
        }
      });
}

/// All plain models: interpretations admitting some evaluation that makes
/// the hard part hold.
inline std::vector<Interpretation> enumerate_models(const EwSystem& sys,
                                                    const SolveOptions& opts = {}) {
  state_space_size(sys, opts.cap);
  auto sig = signature(sys);
  std::uint64_t interps = checked_pow2(sig.vocab.size(), opts.cap);
  std::uint64_t evals = evaluation_count(sig.spec, opts.cap);
  return detail::partitioned_scan<Interpretation>(
      interps, opts, [&](std::uint64_t mask, auto& out) {
        Interpretation interp = interpretation_from_mask(sig.vocab, mask);
        for (std::uint64_t e = 0; e < evals; ++e) {
          if (holds_eams(sys.hard, interp, evaluation_from_index(sig.spec, e))) {
            out.push_back(interp);
            return;
          }
        }
      });
}

/// Iterative level-descending argopt over plain level costs.
inline std::vector<Interpretation> optimal_models(
    const EwSystem& sys, Sense sense, const SolveOptions& opts = {}) {
  std::vector<Interpretation> survivors = enumerate_models(sys, opts);
  auto ls = levels(sys);
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
    if (survivors.empty()) break;
    std::vector<std::int64_t> costs;
    costs.reserve(survivors.size());
    for (const auto& interp : survivors)
      costs.push_back(level_cost(interp, sys, *it, opts.cap));
    std::int64_t best = costs[0];
    for (auto c : costs)
      if (sense == Sense::Max ? c > best : c < best) best = c;
    std::vector<Interpretation> next;
    for (std::size_t i = 0; i < survivors.size(); ++i)
      if (costs[i] == best) next.push_back(survivors[i]);
    survivors = std::move(next);
  }
  return survivors;
}

/// Level-descending argopt over extended level costs.
inline std::vector<ExtendedInterpretation> optimal_extended_models(
    const EwSystem& sys, Sense sense, const SolveOptions& opts = {}) {
  std::vector<ExtendedInterpretation> survivors =
      enumerate_extended_models(sys, opts);
  auto ls = levels(sys);
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
    if (survivors.empty()) break;
    std::vector<Rational> costs;
    costs.reserve(survivors.size());
    for (const auto& em : survivors)
      costs.push_back(level_cost_extended(em.interp, em.eval, sys, *it, opts.cap));
    Rational best = costs[0];
    for (const auto& c : costs)
      if (sense == Sense::Max ? c > best : c < best) best = c;
    std::vector<ExtendedInterpretation> next;
    for (std::size_t i = 0; i < survivors.size(); ++i)
      if (costs[i] == best) next.push_back(survivors[i]);
    survivors = std::move(next);
  }
  return survivors;
}

/// Strict level-lexicographic improvement: equality above some level l and
/// a strict improvement at l, direction per sense.  Both arguments must be
/// models of the system.
inline bool dominates(const Interpretation& challenger,
                      const Interpretation& incumbent, const EwSystem& sys,
                      Sense sense, const SolveOptions& opts = {}) {
  auto ls = levels(sys);
  for (int l : ls) {
    bool higher_equal = true;
    for (int lp : ls) {
      if (lp <= l) continue;
      if (level_cost(challenger, sys, lp, opts.cap) !=
          level_cost(incumbent, sys, lp, opts.cap)) {
        higher_equal = false;
        break;
      }
    }
    if (!higher_equal) continue;
    std::int64_t c = level_cost(challenger, sys, l, opts.cap);
    std::int64_t i = level_cost(incumbent, sys, l, opts.cap);
    if (sense == Sense::Max ? c > i : c < i) return true;
  }
  return false;
}

inline bool dominates_extended(const ExtendedInterpretation& challenger,
                               const ExtendedInterpretation& incumbent,
                               const EwSystem& sys, Sense sense,
                               const SolveOptions& opts = {}) {
  auto ls = levels(sys);
  for (int l : ls) {
    bool higher_equal = true;
    for (int lp : ls) {
      if (lp <= l) continue;
      if (level_cost_extended(challenger.interp, challenger.eval, sys, lp,
                              opts.cap) !=
          level_cost_extended(incumbent.interp, incumbent.eval, sys, lp,
                              opts.cap)) {
        higher_equal = false;
        break;
      }
    }
    if (!higher_equal) continue;
    Rational c =
        level_cost_extended(challenger.interp, challenger.eval, sys, l, opts.cap);
    Rational i =
        level_cost_extended(incumbent.interp, incumbent.eval, sys, l, opts.cap);
    if (sense == Sense::Max ? c > i : c < i) return true;
  }
  return false;
}

namespace detail {

/// cost[i][k] dominates cost[j][k]: equality above some level index k and
/// a strict improvement at k, direction per sense.  Levels are indexed in
/// ascending order.
inline bool cost_row_dominates(const std::vector<Rational>& challenger,
                               const std::vector<Rational>& incumbent,
                               Sense sense) {
  for (std::size_t k = 0; k < challenger.size(); ++k) {
    bool higher_equal = true;
    for (std::size_t k2 = k + 1; k2 < challenger.size(); ++k2)
      if (challenger[k2] != incumbent[k2]) {
        higher_equal = false;
        break;
      }
    if (!higher_equal) continue;
    if (sense == Sense::Max ? challenger[k] > incumbent[k]
                            : challenger[k] < incumbent[k])
      return true;
  }
  return false;
}

template <typename Candidate, typename CostFn>
std::vector<Candidate> undominated(const std::vector<Candidate>& all,
                                   std::size_t num_levels, Sense sense,
                                   CostFn&& cost_of) {
  std::vector<std::vector<Rational>> costs(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    costs[i].reserve(num_levels);
    for (std::size_t k = 0; k < num_levels; ++k)
      costs[i].push_back(cost_of(all[i], k));
  }
  // Candidates sharing a cost row are dominated together or not at all,
  // so the pairwise check runs over distinct rows only.
  std::map<std::vector<Rational>, bool> dominated;
  for (const auto& row : costs) dominated.emplace(row, false);
  for (auto& [row, flag] : dominated) {
    for (const auto& [other, unused] : dominated)
      if (cost_row_dominates(other, row, sense)) {
        flag = true;
        break;
      }
  }
  std::vector<Candidate> out;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (!dominated.at(costs[i])) out.push_back(all[i]);
  return out;
}

}  // namespace detail

/// Independent route: keep the models no other model dominates.
inline std::vector<Interpretation> optimal_models_by_domination(
    const EwSystem& sys, Sense sense, const SolveOptions& opts = {}) {
  auto all = enumerate_models(sys, opts);
  auto ls = levels(sys);
  return detail::undominated(all, ls.size(), sense,
                             [&](const Interpretation& interp, std::size_t k) {
                               return Rational(
                                   level_cost(interp, sys, ls[k], opts.cap));
                             });
}

inline std::vector<ExtendedInterpretation> optimal_extended_models_by_domination(
    const EwSystem& sys, Sense sense, const SolveOptions& opts = {}) {
  auto all = enumerate_extended_models(sys, opts);
  auto ls = levels(sys);
  return detail::undominated(
      all, ls.size(), sense, [&](const ExtendedInterpretation& em, std::size_t k) {
        return level_cost_extended(em.interp, em.eval, sys, ls[k], opts.cap);
      });
}

inline CostVector cost_vector(const Interpretation& interp, const EwSystem& sys,
                              Sense sense, std::uint64_t cap = kDefaultStateCap) {
  CostVector cv;
  cv.sense = sense;
  for (int l : levels(sys)) cv.per_level[l] = Rational(level_cost(interp, sys, l, cap));
  return cv;
}

inline CostVector cost_vector_extended(const ExtendedInterpretation& em,
                                       const EwSystem& sys, Sense sense,
                                       std::uint64_t cap = kDefaultStateCap) {
  CostVector cv;
  cv.sense = sense;
  for (int l : levels(sys))
    cv.per_level[l] = level_cost_extended(em.interp, em.eval, sys, l, cap);
  return cv;
}

}  // namespace ews
