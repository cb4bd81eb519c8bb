#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ews/frontends/casp.hpp"
#include "ews/frontends/oprogram.hpp"
#include "ews/solver.hpp"
#include "ews/transforms.hpp"

namespace ews::verify {

struct RandomSystemParams {
  std::uint64_t seed = 20240229;
  int trials = 200;
  int max_atoms = 6;
  int max_vars = 3;
  int max_domain = 4;
  int max_soft = 6;
  std::int64_t max_weight = 5;
  int max_level = 4;
  std::int64_t max_coeff = 3;
};

struct VerifyReport {
  int trials = 0;
  std::vector<std::string> failures;  // "trial <n> seed <s>: <check>"
  bool ok() const { return failures.empty(); }
  std::string str() const {
    std::ostringstream out;
    out << trials << " trials, " << failures.size() << " failures\n";
    for (const auto& f : failures) out << "  " << f << "\n";
    return out.str();
  }
};

namespace detail {

using Rng = std::mt19937_64;

inline std::int64_t pick(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline PropFormula random_formula(Rng& rng, const std::vector<std::string>& atoms,
                                  int depth) {
  if (atoms.empty()) return PropFormula::conj({});
  if (depth <= 0 || pick(rng, 0, 2) == 0)
    return PropFormula::literal(atoms[pick(rng, 0, atoms.size() - 1)],
                                pick(rng, 0, 1) == 0);
  switch (pick(rng, 0, 3)) {
    case 0: return PropFormula::negate(random_formula(rng, atoms, depth - 1));
    case 1:
      return PropFormula::conj({random_formula(rng, atoms, depth - 1),
                                random_formula(rng, atoms, depth - 1)});
    case 2:
      return PropFormula::disj({random_formula(rng, atoms, depth - 1),
                                random_formula(rng, atoms, depth - 1)});
    default:
      return PropFormula::implies(random_formula(rng, atoms, depth - 1),
                                  random_formula(rng, atoms, depth - 1));
  }
}

inline LinearConstraint random_linear(Rng& rng,
                                      const std::vector<std::string>& vars) {
  LinearConstraint lc;
  for (const auto& v : vars)
    if (pick(rng, 0, 1) == 0) lc.terms.push_back({pick(rng, -2, 2), v});
  if (lc.terms.empty() && !vars.empty())
    lc.terms.push_back({1, vars[pick(rng, 0, vars.size() - 1)]});
  lc.rel = static_cast<Rel>(pick(rng, 0, 5));
  lc.rhs = pick(rng, -3, 3);
  return lc;
}

/// Random system whose soft part keeps weights and coefficients on
/// separate conditions: weighted conditions are variable-free
/// propositional modules, coefficient conditions are zero-weight
/// universal modules over a subset of the variables.  Within this class
/// the weight-sign elimination rewrites are exact (mixing a nonzero
/// weight with a nonzero coefficient on one condition breaks them).
inline EwSystem random_system(Rng& rng, const RandomSystemParams& p) {
  int natoms = int(pick(rng, 1, p.max_atoms));
  int nvars = int(pick(rng, 0, p.max_vars));

  std::vector<std::string> regular;
  for (int i = 0; i < natoms; ++i) regular.push_back("a" + std::to_string(i));
  Specification spec;
  std::vector<std::string> vars;
  for (int i = 0; i < nvars; ++i) {
    std::string v = "x" + std::to_string(i);
    vars.push_back(v);
    std::int64_t lo = pick(rng, -2, 1);
    spec.add_range(v, lo, lo + pick(rng, 0, p.max_domain - 1));
  }

  Vocabulary vocab;
  for (const auto& a : regular) vocab.add(a);
  Denotation denot;
  int nconstraint = nvars > 0 ? int(pick(rng, 0, 2)) : 0;
  std::vector<std::string> catoms;
  for (int i = 0; i < nconstraint; ++i) {
    std::string name = "c" + std::to_string(i);
    catoms.push_back(name);
    vocab.add(name, AtomKind::Constraint);
    denot[name] = random_linear(rng, vars);
  }

  EwSystem sys;
  sys.mode = pick(rng, 0, 1) == 0 ? AtomMode::Strict : AtomMode::NonStrict;
  sys.sense = Sense::Min;

  EModule hard;
  hard.kind = catoms.empty() ? LogicKind::Pl : LogicKind::Smt;
  hard.vocab = vocab;
  hard.spec = spec;
  hard.denot = denot;
  hard.mode = sys.mode;
  std::vector<std::string> all_atoms = regular;
  all_atoms.insert(all_atoms.end(), catoms.begin(), catoms.end());
  int nformulas = int(pick(rng, 0, 2));
  for (int i = 0; i < nformulas; ++i)
    hard.formulas.push_back(random_formula(rng, all_atoms, 2));
  sys.hard.push_back(std::move(hard));

  if (nvars > 0 && pick(rng, 0, 1) == 0) {
    EModule csp;
    csp.kind = LogicKind::Icsp;
    csp.spec = spec;
    csp.mode = sys.mode;
    csp.constraints.push_back(random_linear(rng, vars));
    sys.hard.push_back(std::move(csp));
  }

  int nsoft = int(pick(rng, 0, p.max_soft));
  for (int i = 0; i < nsoft; ++i) {
    EwCondition cond;
    cond.level = int(pick(rng, 1, p.max_level)) * int(pick(rng, 1, 3));
    bool objective = nvars > 0 && pick(rng, 0, 2) == 0;
    if (objective) {
      Specification sub;
      for (const auto& v : vars)
        if (pick(rng, 0, 1) == 0 || sub.size() == 0) sub.add(v, spec.domain_of(v));
      cond.module = universal_module(Vocabulary{}, sub);
      cond.weight = 0;
      for (const auto& v : cond.module.spec.variables)
        cond.coeffs[v] =
            Rational(pick(rng, -p.max_coeff, p.max_coeff), pick(rng, 1, 2));
    } else {
      cond.module.kind = LogicKind::Pl;
      Vocabulary sub;
      for (const auto& a : regular)
        if (pick(rng, 0, 1) == 0 || sub.size() == 0) sub.add(a);
      std::vector<std::string> names = sub.atoms;
      cond.module.vocab = std::move(sub);
      cond.module.formulas.push_back(random_formula(rng, names, 2));
      cond.weight = pick(rng, -p.max_weight, p.max_weight);
    }
    sys.soft.push_back(std::move(cond));
  }
  return sys;
}

template <typename T>
inline std::set<T> as_set(const std::vector<T>& v) {
  return std::set<T>(v.begin(), v.end());
}

/// A structurally different module with identical membership: formulas
/// folded into one conjunction with a tautology appended.
inline EModule equivalent_variant(const EModule& m) {
  EModule out = m;
  if ((m.kind == LogicKind::Pl || m.kind == LogicKind::Sat ||
       m.kind == LogicKind::Smt || m.kind == LogicKind::Rsmt) &&
      !m.vocab.regular_atoms().empty()) {
    const std::string a = m.vocab.regular_atoms().front();
    PropFormula taut = PropFormula::disj(
        {PropFormula::atom(a), PropFormula::negate(PropFormula::atom(a))});
    std::vector<PropFormula> kids = m.formulas;
    kids.push_back(taut);
    out.formulas = {PropFormula::conj(std::move(kids))};
  }
  return out;
}

struct TrialContext {
  const EwSystem& sys;
  std::uint64_t seed;
  int trial;
  VerifyReport& report;

  void expect(bool pass, const std::string& check) {
    if (!pass)
      report.failures.push_back("trial " + std::to_string(trial) + " seed " +
                                std::to_string(seed) + ": " + check);
  }
};

inline void check_definition_equivalence(TrialContext& t) {
  for (Sense sense : {Sense::Max, Sense::Min}) {
    std::string tag = std::string(sense_str(sense));
    t.expect(as_set(optimal_models(t.sys, sense)) ==
                 as_set(optimal_models_by_domination(t.sys, sense)),
             "argopt/domination equivalence, plain, " + tag);
    t.expect(as_set(optimal_extended_models(t.sys, sense)) ==
                 as_set(optimal_extended_models_by_domination(t.sys, sense)),
             "argopt/domination equivalence, extended, " + tag);
  }
}

inline void check_star_duality(TrialContext& t) {
  EwSystem starred = star(t.sys);
  t.expect(as_set(optimal_models(t.sys, Sense::Max)) ==
               as_set(optimal_models(starred, Sense::Min)),
           "star swaps max and min plain optima");
  t.expect(as_set(optimal_models(t.sys, Sense::Min)) ==
               as_set(optimal_models(starred, Sense::Max)),
           "star swaps min and max plain optima");
  EwSystem doubled = star_star(t.sys);
  t.expect(as_set(optimal_extended_models(t.sys, Sense::Max)) ==
               as_set(optimal_extended_models(doubled, Sense::Min)),
           "star-star swaps max and min extended optima");
  t.expect(as_set(optimal_extended_models(t.sys, Sense::Min)) ==
               as_set(optimal_extended_models(doubled, Sense::Max)),
           "star-star swaps min and max extended optima");
}

inline void check_sign_elimination(TrialContext& t) {
  for (auto [variant, name] :
       {std::pair{SignElimination::DropNegative, "elim-neg"},
        std::pair{SignElimination::DropPositive, "elim-pos"},
        std::pair{SignElimination::DropNegativeExtended, "elim-neg-ext"},
        std::pair{SignElimination::DropPositiveExtended, "elim-pos-ext"}}) {
    EwSystem rewritten = eliminate_weights_by_sign(t.sys, variant);
    for (Sense sense : {Sense::Max, Sense::Min}) {
      std::string tag = std::string(name) + ", " + sense_str(sense);
      t.expect(as_set(optimal_models(t.sys, sense)) ==
                   as_set(optimal_models(rewritten, sense)),
               tag + " preserves plain optima");
      if (variant == SignElimination::DropNegativeExtended ||
          variant == SignElimination::DropPositiveExtended)
        t.expect(as_set(optimal_extended_models(t.sys, sense)) ==
                     as_set(optimal_extended_models(rewritten, sense)),
                 tag + " preserves extended optima");
    }
  }
}

inline void check_level_normalization(TrialContext& t) {
  EwSystem normal = normalize_levels(t.sys);
  auto ls = levels(normal);
  for (std::size_t i = 0; i < ls.size(); ++i)
    t.expect(ls[i] == int(i) + 1, "normalized levels are 1..n");
  for (Sense sense : {Sense::Max, Sense::Min}) {
    std::string tag = sense_str(sense);
    t.expect(as_set(optimal_models(t.sys, sense)) ==
                 as_set(optimal_models(normal, sense)),
             "level normalization preserves plain optima, " + tag);
    t.expect(as_set(optimal_extended_models(t.sys, sense)) ==
                 as_set(optimal_extended_models(normal, sense)),
             "level normalization preserves extended optima, " + tag);
  }
}

inline void check_basic_properties(TrialContext& t) {
  // Same hard part, different soft part: same (extended) models.
  EwSystem stripped = t.sys;
  stripped.soft.clear();
  t.expect(as_set(enumerate_models(t.sys)) == as_set(enumerate_models(stripped)),
           "soft part does not change the model set");
  t.expect(as_set(enumerate_extended_models(t.sys)) ==
               as_set(enumerate_extended_models(stripped)),
           "soft part does not change the extended model set");

  // Empty soft part: everything optimal.
  t.expect(as_set(optimal_models(stripped, Sense::Min)) ==
               as_set(enumerate_models(stripped)),
           "empty soft part makes every model optimal");
  t.expect(as_set(optimal_extended_models(stripped, Sense::Max)) ==
               as_set(enumerate_extended_models(stripped)),
           "empty soft part makes every extended model optimal");

  EwSystem no_zero = drop_zero_weight(t.sys);
  EwSystem no_coeff = zero_coefficients(t.sys);
  EwSystem no_inert = drop_inert(t.sys);
  for (Sense sense : {Sense::Max, Sense::Min}) {
    std::string tag = sense_str(sense);
    t.expect(as_set(optimal_models(t.sys, sense)) ==
                 as_set(optimal_models(no_zero, sense)),
             "dropping zero-weight conditions preserves plain optima, " + tag);
    t.expect(as_set(optimal_models(t.sys, sense)) ==
                 as_set(optimal_models(no_coeff, sense)),
             "zeroing coefficients preserves plain optima, " + tag);
    t.expect(as_set(optimal_extended_models(t.sys, sense)) ==
                 as_set(optimal_extended_models(no_inert, sense)),
             "dropping weight-0 coefficient-free conditions preserves "
             "extended optima, " + tag);

    // Special form (all coefficients zero): extended optimality is decided
    // by the interpretation alone.
    auto plain = as_set(optimal_models(no_coeff, sense));
    std::set<ExtendedInterpretation> expected;
    for (const auto& em : enumerate_extended_models(no_coeff))
      if (plain.count(em.interp)) expected.insert(em);
    t.expect(as_set(optimal_extended_models(no_coeff, sense)) == expected,
             "coefficient-free extended optima project onto plain optima, " +
                 tag);
  }
}

inline void check_equivalent_replacement(TrialContext& t) {
  EwSystem replaced = t.sys;
  for (auto& m : replaced.hard) m = equivalent_variant(m);
  for (auto& cond : replaced.soft) cond.module = equivalent_variant(cond.module);
  t.expect(as_set(enumerate_models(t.sys)) == as_set(enumerate_models(replaced)),
           "equivalent-theory replacement preserves models");
  for (Sense sense : {Sense::Max, Sense::Min}) {
    std::string tag = sense_str(sense);
    t.expect(as_set(optimal_models(t.sys, sense)) ==
                 as_set(optimal_models(replaced, sense)),
             "equivalent-theory replacement preserves plain optima, " + tag);
    t.expect(as_set(optimal_extended_models(t.sys, sense)) ==
                 as_set(optimal_extended_models(replaced, sense)),
             "equivalent-theory replacement preserves extended optima, " + tag);
  }
}

inline void check_complement_partition(Rng& rng, TrialContext& t) {
  Specification spec;
  int nvars = int(pick(rng, 1, 3));
  std::vector<std::string> vars;
  for (int i = 0; i < nvars; ++i) {
    std::string v = "y" + std::to_string(i);
    vars.push_back(v);
    std::int64_t lo = pick(rng, -2, 0);
    spec.add_range(v, lo, lo + pick(rng, 1, 3));
  }
  Constraint lin = random_linear(rng, vars);
  ExtensionalConstraint ext;
  ext.tuple = vars;
  for_each_evaluation(spec, [&](const Evaluation& e) {
    if (pick(rng, 0, 1) == 0) {
      std::vector<std::int64_t> point;
      for (const auto& v : vars) point.push_back(e.at(v));
      ext.allowed.insert(point);
    }
  });
  for (const Constraint& c : {lin, Constraint(ext)}) {
    Constraint comp = complement_constraint(c, spec);
    bool partition = true;
    for_each_evaluation(spec, [&](const Evaluation& e) {
      if (satisfies_constraint(e, c) == satisfies_constraint(e, comp))
        partition = false;
    });
    t.expect(partition, "constraint and complement partition the evaluations");
  }
}

/// Optimal answer sets straight from the domination definition over
/// weak-constraint penalty sums, bypassing the ew-system machinery.
inline void check_oprogram_two_path(Rng& rng, TrialContext& t) {
  int natoms = int(pick(rng, 1, 4));
  std::vector<std::string> atoms;
  for (int i = 0; i < natoms; ++i) atoms.push_back("p" + std::to_string(i));
  frontends::OProgram p;
  int nrules = int(pick(rng, 1, 4));
  for (int i = 0; i < nrules; ++i) {
    Rule r;
    if (pick(rng, 0, 4) > 0) r.head = atoms[pick(rng, 0, natoms - 1)];
    int nbody = int(pick(rng, 0, 2));
    for (int b = 0; b < nbody; ++b) {
      const std::string& a = atoms[pick(rng, 0, natoms - 1)];
      if (pick(rng, 0, 1) == 0) r.pos.push_back(a);
      else r.neg.push_back(a);
    }
    p.rules.push_back(std::move(r));
  }
  int nweak = int(pick(rng, 0, 3));
  for (int i = 0; i < nweak; ++i) {
    frontends::WeakConstraint wc;
    const std::string& a = atoms[pick(rng, 0, natoms - 1)];
    if (pick(rng, 0, 1) == 0) wc.pos.push_back(a);
    else wc.neg.push_back(a);
    wc.weight = pick(rng, -3, 3);
    wc.level = int(pick(rng, 1, 2));
    p.weak.push_back(std::move(wc));
  }

  // Direct route.
  std::set<std::string> atom_set(atoms.begin(), atoms.end());
  std::vector<Interpretation> answer_sets;
  Vocabulary vocab;
  for (const auto& a : atoms) vocab.add(a);
  for_each_interpretation(vocab, [&](const Interpretation& x) {
    if (is_answer_set(p.rules, x)) answer_sets.push_back(x);
  });
  auto penalty = [&](const Interpretation& x, int level) {
    std::int64_t total = 0;
    for (const auto& wc : p.weak) {
      if (wc.level != level) continue;
      bool applies = true;
      for (const auto& a : wc.pos) applies = applies && x.count(a);
      for (const auto& a : wc.neg) applies = applies && !x.count(a);
      if (applies) total += wc.weight;
    }
    return total;
  };
  std::set<int> level_set;
  for (const auto& wc : p.weak) level_set.insert(wc.level);
  std::vector<int> ls(level_set.begin(), level_set.end());
  std::set<Interpretation> direct;
  for (const auto& x : answer_sets) {
    bool dominated = false;
    for (const auto& y : answer_sets) {
      for (int l : ls) {
        bool higher_equal = true;
        for (int lp : ls)
          if (lp > l && penalty(y, lp) != penalty(x, lp)) higher_equal = false;
        if (higher_equal && penalty(y, l) < penalty(x, l)) dominated = true;
      }
    }
    if (!dominated) direct.insert(x);
  }

  // Lowered route; the system's vocabulary may exceed At(P), so compare
  // after projecting onto the program's atoms.
  EwSystem lowered = frontends::lower_oprogram(p);
  std::set<Interpretation> via_system;
  for (const auto& x : optimal_models(lowered, Sense::Min))
    via_system.insert(project_interpretation(x, vocab));
  t.expect(via_system == direct,
           "optimal answer sets agree between direct domination and lowering");
}

/// Direct per-level objective sums over extended answer sets versus the
/// lowered leveled $minimize system.
inline void check_casp_linear_two_path(Rng& rng, TrialContext& t) {
  frontends::CaspProgram p;
  int nvars = int(pick(rng, 1, 2));
  std::vector<std::string> vars;
  for (int i = 0; i < nvars; ++i) {
    std::string v = "z" + std::to_string(i);
    vars.push_back(v);
    p.spec.add_range(v, pick(rng, 0, 1), pick(rng, 2, 3));
  }
  p.declared.add("q0", AtomKind::Constraint);
  p.denot["q0"] = random_linear(rng, vars);
  Rule fact;
  fact.head = "r0";
  p.rules.push_back(fact);
  if (pick(rng, 0, 1) == 0) {
    Rule r;
    r.head = "r1";
    r.pos.push_back("q0");
    p.rules.push_back(r);
  }
  int nterms = int(pick(rng, 1, 2));
  for (int i = 0; i < nterms && i < nvars; ++i) {
    frontends::CaspObjectiveTerm term;
    term.coeffs[vars[i]] = pick(rng, -2, 2);
    term.constant = pick(rng, -2, 2);
    term.level = int(pick(rng, 1, 2));
    term.has_level = true;
    p.objectives.push_back(std::move(term));
  }

  EwSystem lowered = frontends::lower_casp_linear(p);
  const EModule& cas = lowered.hard[0];

  std::vector<ExtendedInterpretation> extended_answer_sets;
  for_each_interpretation(cas.vocab, [&](const Interpretation& x) {
    for_each_evaluation(cas.spec, [&](const Evaluation& nu) {
      if (cas.member(x, nu)) extended_answer_sets.push_back({x, nu});
    });
  });
  auto objective = [&](const Evaluation& nu, int level) {
    Rational total(0);
    for (const auto& term : p.objectives) {
      if (term.level != level) continue;
      Rational sum(term.constant);
      for (const auto& [v, b] : term.coeffs) sum += Rational(b * nu.at(v));
      total += sum;
    }
    return total;
  };
  std::set<int> level_set;
  for (const auto& term : p.objectives) level_set.insert(term.level);
  std::vector<int> ls(level_set.begin(), level_set.end());
  std::set<ExtendedInterpretation> direct;
  for (const auto& em : extended_answer_sets) {
    bool dominated = false;
    for (const auto& other : extended_answer_sets) {
      for (int l : ls) {
        bool higher_equal = true;
        for (int lp : ls)
          if (lp > l && objective(other.eval, lp) != objective(em.eval, lp))
            higher_equal = false;
        if (higher_equal && objective(other.eval, l) < objective(em.eval, l))
          dominated = true;
      }
    }
    if (!dominated) direct.insert(em);
  }

  t.expect(as_set(optimal_extended_models(lowered, Sense::Min)) == direct,
           "leveled $minimize optima agree between direct sums and lowering");
}

/// Weighted MaxSMT argmax straight from the weight sums versus the
/// all-interpretations-hard lowering.
inline void check_maxsmt_two_path(Rng& rng, TrialContext& t) {
  int natoms = int(pick(rng, 1, 4));
  std::vector<std::string> atoms;
  Vocabulary vocab;
  for (int i = 0; i < natoms; ++i) {
    atoms.push_back("m" + std::to_string(i));
    vocab.add(atoms.back());
  }
  int nsoft = int(pick(rng, 1, 4));
  std::vector<std::pair<PropFormula, std::int64_t>> soft;
  for (int i = 0; i < nsoft; ++i)
    soft.push_back({random_formula(rng, atoms, 2), pick(rng, 1, 4)});

  std::vector<Interpretation> all = enumerate_interpretations(vocab);
  std::int64_t best = 0;
  bool first = true;
  auto score = [&](const Interpretation& x) {
    std::int64_t s = 0;
    for (const auto& [f, w] : soft)
      if (f.eval(x)) s += w;
    return s;
  };
  for (const auto& x : all) {
    std::int64_t s = score(x);
    if (first || s > best) best = s;
    first = false;
  }
  std::set<Interpretation> direct;
  for (const auto& x : all)
    if (score(x) == best) direct.insert(x);

  EwSystem sys;
  sys.sense = Sense::Max;
  sys.hard.push_back(universal_module(vocab, Specification{}));
  for (const auto& [f, w] : soft) {
    EwCondition cond;
    cond.module.kind = LogicKind::Pl;
    cond.module.vocab = vocab;
    cond.module.formulas.push_back(f);
    cond.weight = w;
    sys.soft.push_back(std::move(cond));
  }
  t.expect(as_set(optimal_models(sys, Sense::Max)) == direct,
           "weighted maximum-satisfaction argmax agrees with the lowering");
}

}  // namespace detail

inline VerifyReport run_verify(const RandomSystemParams& params) {
  VerifyReport report;
  for (int trial = 0; trial < params.trials; ++trial) {
    ++report.trials;
    std::uint64_t seed = params.seed + std::uint64_t(trial);
    detail::Rng rng(seed);
    EwSystem sys = detail::random_system(rng, params);
    if (!check_coherence(sys).ok()) {
      report.failures.push_back("trial " + std::to_string(trial) + " seed " +
                                std::to_string(seed) +
                                ": generated system is incoherent");
      continue;
    }
    detail::TrialContext t{sys, seed, trial, report};
    detail::check_definition_equivalence(t);
    detail::check_star_duality(t);
    detail::check_sign_elimination(t);
    detail::check_level_normalization(t);
    detail::check_basic_properties(t);
    detail::check_equivalent_replacement(t);
    detail::check_complement_partition(rng, t);
    detail::check_oprogram_two_path(rng, t);
    detail::check_casp_linear_two_path(rng, t);
    detail::check_maxsmt_two_path(rng, t);
  }
  return report;
}

}  // namespace ews::verify
