#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace ews {

/// Hard limit on the number of extended interpretations an exhaustive
/// sweep may visit.  Exceeding it raises CapExceeded, never truncates.
constexpr std::uint64_t kDefaultStateCap = 50'000'000;

class CapExceeded : public std::runtime_error {
public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

class SignatureError : public std::runtime_error {
public:
  explicit SignatureError(const std::string& what) : std::runtime_error(what) {}
};

enum class AtomKind { Regular, Constraint };

/// Ordered finite set of named atoms, each regular or constraint.
/// The construction order is the canonical index order.
struct Vocabulary {
  std::vector<std::string> atoms;
  std::vector<AtomKind> kinds;

  void add(const std::string& name, AtomKind kind = AtomKind::Regular) {
    if (contains(name)) throw SignatureError("duplicate atom: " + name);
    atoms.push_back(name);
    kinds.push_back(kind);
  }
  std::size_t size() const { return atoms.size(); }
  bool contains(const std::string& name) const {
    return std::find(atoms.begin(), atoms.end(), name) != atoms.end();
  }
  AtomKind kind_of(const std::string& name) const {
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (atoms[i] == name) return kinds[i];
    throw SignatureError("unknown atom: " + name);
  }
  std::vector<std::string> regular_atoms() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (kinds[i] == AtomKind::Regular) out.push_back(atoms[i]);
    return out;
  }
  std::vector<std::string> constraint_atoms() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (kinds[i] == AtomKind::Constraint) out.push_back(atoms[i]);
    return out;
  }
  /// Union with another vocabulary; shared names must agree on kind.
  void merge(const Vocabulary& other) {
    for (std::size_t i = 0; i < other.atoms.size(); ++i) {
      if (!contains(other.atoms[i])) {
        add(other.atoms[i], other.kinds[i]);
      } else if (kind_of(other.atoms[i]) != other.kinds[i]) {
        throw SignatureError("atom kind mismatch: " + other.atoms[i]);
      }
    }
  }
  bool operator==(const Vocabulary& o) const {
    return atoms == o.atoms && kinds == o.kinds;
  }
};

/// An interpretation is the set of atom names it makes true.
using Interpretation = std::set<std::string>;

/// Ordered variables with explicit finite integer domains (sorted ascending).
struct Specification {
  std::vector<std::string> variables;
  std::vector<std::vector<std::int64_t>> domains;

  void add(const std::string& name, std::vector<std::int64_t> domain) {
    if (contains(name)) throw SignatureError("duplicate variable: " + name);
    if (domain.empty()) throw SignatureError("empty domain for: " + name);
    std::sort(domain.begin(), domain.end());
    domain.erase(std::unique(domain.begin(), domain.end()), domain.end());
    variables.push_back(name);
    domains.push_back(std::move(domain));
  }
  void add_range(const std::string& name, std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw SignatureError("empty range for: " + name);
    std::vector<std::int64_t> d;
    for (std::int64_t v = lo; v <= hi; ++v) d.push_back(v);
    add(name, std::move(d));
  }
  std::size_t size() const { return variables.size(); }
  bool contains(const std::string& name) const {
    return std::find(variables.begin(), variables.end(), name) !=
           variables.end();
  }
  const std::vector<std::int64_t>& domain_of(const std::string& name) const {
    for (std::size_t i = 0; i < variables.size(); ++i)
      if (variables[i] == name) return domains[i];
    throw SignatureError("unknown variable: " + name);
  }
  /// Union with another specification; shared variables must have
  /// identical domains (the coherence requirement).
  void merge(const Specification& other) {
    for (std::size_t i = 0; i < other.variables.size(); ++i) {
      if (!contains(other.variables[i])) {
        variables.push_back(other.variables[i]);
        domains.push_back(other.domains[i]);
      } else if (domain_of(other.variables[i]) != other.domains[i]) {
        throw SignatureError("domain mismatch on shared variable: " +
                             other.variables[i]);
      }
    }
  }
  bool operator==(const Specification& o) const {
    return variables == o.variables && domains == o.domains;
  }
};

/// Total mapping variable -> value for the variables of one Specification.
using Evaluation = std::map<std::string, std::int64_t>;

struct ExtendedInterpretation {
  Interpretation interp;
  Evaluation eval;

  bool operator==(const ExtendedInterpretation& o) const {
    return interp == o.interp && eval == o.eval;
  }
  bool operator<(const ExtendedInterpretation& o) const {
    if (interp != o.interp) return interp < o.interp;
    return eval < o.eval;
  }
};

inline std::uint64_t checked_pow2(std::size_t n, std::uint64_t cap) {
  if (n >= 63 || (std::uint64_t{1} << n) > cap)
    throw CapExceeded("2^" + std::to_string(n) + " interpretations exceed cap " +
                      std::to_string(cap));
  return std::uint64_t{1} << n;
}

inline std::uint64_t evaluation_count(const Specification& spec,
                                      std::uint64_t cap) {
  std::uint64_t total = 1;
  for (const auto& d : spec.domains) {
    if (total > cap / d.size())
      throw CapExceeded("evaluation space exceeds cap " + std::to_string(cap));
    total *= d.size();
  }
  return total;
}

/// Interpretation for bitmask `mask`: bit i set selects atom i.
inline Interpretation interpretation_from_mask(const Vocabulary& vocab,
                                               std::uint64_t mask) {
  Interpretation out;
  for (std::size_t i = 0; i < vocab.size(); ++i)
    if (mask & (std::uint64_t{1} << i)) out.insert(vocab.atoms[i]);
  return out;
}

/// Evaluation for mixed-radix index `idx`, first variable most significant.
inline Evaluation evaluation_from_index(const Specification& spec,
                                        std::uint64_t idx) {
  Evaluation out;
  for (std::size_t i = spec.size(); i-- > 0;) {
    const auto& d = spec.domains[i];
    out[spec.variables[i]] = d[idx % d.size()];
    idx /= d.size();
  }
  return out;
}

/// All 2^|sigma| interpretations in canonical order (atoms as bits,
/// ascending numeric order).
inline void for_each_interpretation(
    const Vocabulary& vocab, const std::function<void(const Interpretation&)>& fn,
    std::uint64_t cap = kDefaultStateCap) {
  std::uint64_t n = checked_pow2(vocab.size(), cap);
  for (std::uint64_t mask = 0; mask < n; ++mask)
    fn(interpretation_from_mask(vocab, mask));
}

inline std::vector<Interpretation> enumerate_interpretations(
    const Vocabulary& vocab, std::uint64_t cap = kDefaultStateCap) {
  std::vector<Interpretation> out;
  for_each_interpretation(vocab, [&](const Interpretation& i) { out.push_back(i); },
                          cap);
  return out;
}

/// Cartesian product of per-variable domains, lexicographic in variable
/// order then ascending value.
inline void for_each_evaluation(const Specification& spec,
                                const std::function<void(const Evaluation&)>& fn,
                                std::uint64_t cap = kDefaultStateCap) {
  std::uint64_t n = evaluation_count(spec, cap);
  for (std::uint64_t idx = 0; idx < n; ++idx)
    fn(evaluation_from_index(spec, idx));
}

inline std::vector<Evaluation> enumerate_evaluations(
    const Specification& spec, std::uint64_t cap = kDefaultStateCap) {
  std::vector<Evaluation> out;
  for_each_evaluation(spec, [&](const Evaluation& e) { out.push_back(e); }, cap);
  return out;
}

/// I restricted to the atoms of `sub`.
inline Interpretation project_interpretation(const Interpretation& interp,
                                             const Vocabulary& sub) {
  Interpretation out;
  for (const auto& a : interp)
    if (sub.contains(a)) out.insert(a);
  return out;
}

/// nu restricted to the variables of `vars`; every requested variable
/// must be present in nu.
inline Evaluation project_evaluation(const Evaluation& eval,
                                     const std::vector<std::string>& vars) {
  Evaluation out;
  for (const auto& v : vars) {
    auto it = eval.find(v);
    if (it == eval.end()) throw SignatureError("variable not in evaluation: " + v);
    out[v] = it->second;
  }
  return out;
}

}  // namespace ews
