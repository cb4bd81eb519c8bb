#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ews/frontends/casp.hpp"
#include "ews/frontends/gpw.hpp"
#include "ews/frontends/ilp.hpp"
#include "ews/frontends/oprogram.hpp"
#include "ews/frontends/wcnf.hpp"
#include "ews/json_io.hpp"
#include "ews/solver.hpp"
#include "ews/transforms.hpp"

namespace ews::driver {

inline void set_mode(EwSystem& sys, AtomMode mode) {
  sys.mode = mode;
  for (auto& m : sys.hard) m.mode = mode;
  for (auto& cond : sys.soft) cond.module.mode = mode;
}

/// Lowers `text` in the named input format to an ew-system.  The dialect
/// fixes the optimality sense on the returned system.
inline EwSystem lower_input(const std::string& format, const std::string& text,
                            std::vector<std::string>* warnings = nullptr) {
  if (format == "ews") return io::load_system(text);
  if (format == "wcnf") return frontends::lower_wcnf(frontends::parse_wcnf(text));
  if (format == "op")
    return frontends::lower_oprogram(frontends::parse_oprogram(text), warnings);
  if (format == "gpw") return frontends::lower_gpw(frontends::parse_gpw(text));
  if (format == "omt") {
    frontends::GpwProblem p = frontends::parse_gpw(text);
    if (!p.minimize_var)
      throw ParseError(1, "objective missing; add a 'minimize <var>' line");
    return frontends::lower_omt(p, *p.minimize_var);
  }
  if (format == "ilp") return frontends::lower_ilp(frontends::parse_ilp(text));
  if (format == "cc21")
    return frontends::lower_casp_weak(frontends::parse_casp(text));
  if (format == "cc22")
    return frontends::lower_casp_vars(frontends::parse_casp(text));
  if (format == "cc3")
    return frontends::lower_casp_linear(frontends::parse_casp(text));
  throw ParseError(1, "unknown input format: " + format);
}

struct SolveRequest {
  std::string format = "ews";
  bool extended = false;
  std::string sense = "auto";  // auto | max | min
  bool all = false;
  bool nonstrict = false;
  std::uint64_t cap = kDefaultStateCap;
  int threads = 1;
};

inline io::ordered_json interpretation_entry(const Interpretation& interp,
                                             const Evaluation& eval,
                                             const CostVector& cv) {
  io::ordered_json m;
  m["atoms"] = interp;
  m["evaluation"] = io::ordered_json::object();
  for (const auto& [v, val] : eval) m["evaluation"][v] = val;
  m["costs"] = io::ordered_json::object();
  for (const auto& [l, c] : cv.per_level) m["costs"][std::to_string(l)] = c.str();
  return m;
}

/// Machine-readable result: {"models": [...], "stats": {...}}.  Content is
/// independent of the worker count.
inline io::ordered_json solve_to_json(const EwSystem& input,
                                      const SolveRequest& req) {
  EwSystem sys = input;
  if (req.nonstrict) set_mode(sys, AtomMode::NonStrict);
  Sense sense = sys.sense;
  bool overridden = false;
  if (req.sense == "max") { sense = Sense::Max; overridden = sense != sys.sense; }
  else if (req.sense == "min") { sense = Sense::Min; overridden = sense != sys.sense; }
  else if (req.sense != "auto") throw ParseError(1, "bad sense: " + req.sense);

  CoherenceReport coherence = check_coherence(sys);
  if (!coherence.ok())
    throw SignatureError("incoherent system:\n" + coherence.str());

  SolveOptions opts{req.cap, req.threads};
  io::ordered_json out;
  out["models"] = io::ordered_json::array();
  std::uint64_t states = state_space_size(sys, req.cap);
  std::size_t model_count = 0;

  if (req.extended) {
    auto all = enumerate_extended_models(sys, opts);
    model_count = all.size();
    auto chosen = req.all ? all : optimal_extended_models(sys, sense, opts);
    for (const auto& em : chosen)
      out["models"].push_back(interpretation_entry(
          em.interp, em.eval, cost_vector_extended(em, sys, sense, req.cap)));
  } else {
    auto all = enumerate_models(sys, opts);
    model_count = all.size();
    auto chosen = req.all ? all : optimal_models(sys, sense, opts);
    for (const auto& interp : chosen)
      out["models"].push_back(interpretation_entry(
          interp, Evaluation{}, cost_vector(interp, sys, sense, req.cap)));
  }

  out["stats"] = io::ordered_json::object();
  out["stats"]["states"] = states;
  out["stats"]["models"] = model_count;
  out["stats"]["reported"] = out["models"].size();
  out["stats"]["sense"] = sense_str(sense);
  out["stats"]["sense_overridden"] = overridden;
  out["stats"]["extended"] = req.extended;
  return out;
}

struct TransformRequest {
  std::string format = "ews";
  std::string apply;
  bool nonstrict = false;
};

/// Applies one named rewrite; returns the rewritten system plus a report.
/// `warnings` receives a note for the variants that are only safe for
/// plain optimality.
inline EwSystem apply_transform(const EwSystem& input, const std::string& name,
                                TransformReport* report,
                                std::vector<std::string>* warnings) {
  auto warn_plain_only = [&](const std::string& tag) {
    if (warnings)
      warnings->push_back(tag +
                          " preserves plain optima only; use the -ext variant "
                          "when extended optima matter");
  };
  if (report) report->transform = name;
  if (name == "normalize-levels") return normalize_levels(input, report);
  if (name == "star") return star(input);
  if (name == "star-star") return star_star(input);
  if (name == "elim-neg") {
    warn_plain_only("elim-neg");
    return eliminate_weights_by_sign(input, SignElimination::DropNegative, report);
  }
  if (name == "elim-pos") {
    warn_plain_only("elim-pos");
    return eliminate_weights_by_sign(input, SignElimination::DropPositive, report);
  }
  if (name == "elim-neg-ext")
    return eliminate_weights_by_sign(input, SignElimination::DropNegativeExtended,
                                     report);
  if (name == "elim-pos-ext")
    return eliminate_weights_by_sign(input, SignElimination::DropPositiveExtended,
                                     report);
  if (name == "drop-zero") {
    warn_plain_only("drop-zero");
    return drop_zero_weight(input);
  }
  if (name == "drop-inert") return drop_inert(input);
  if (name == "zero-coeffs") {
    warn_plain_only("zero-coeffs");
    return zero_coefficients(input);
  }
  throw ParseError(1, "unknown transform: " + name);
}

}  // namespace ews::driver
