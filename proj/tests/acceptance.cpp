// Acceptance checks: one line per criterion, exact comparisons only.
// Returns nonzero when any criterion fails.

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ews/driver.hpp"
#include "ews/verify.hpp"

using namespace ews;

namespace {

bool all_pass = true;

void criterion(int n, bool pass, const std::string& what) {
  std::cout << "criterion " << n << " (" << what << "): "
            << (pass ? "pass" : "FAIL") << "\n";
  if (!pass) all_pass = false;
}

std::string read_file(const std::string& name) {
  std::ifstream in(std::string(EWS_DATA_DIR) + "/" + name, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open data file: " + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

template <typename T>
std::set<T> as_set(const std::vector<T>& v) {
  return {v.begin(), v.end()};
}

Evaluation x_is(std::int64_t v) { return {{"x", v}}; }

// -------------------------------------------------------------- criterion 1

void check_answer_sets() {
  LogicProgram prog{Rule{"a", {}, {"b"}}, Rule{"b", {}, {"a"}}};
  Vocabulary two;
  two.add("a");
  two.add("b");
  std::set<Interpretation> stable;
  for (const auto& x : enumerate_interpretations(two))
    if (is_answer_set(prog, x)) stable.insert(x);

  Vocabulary three = two;
  three.add("c");
  std::set<Interpretation> input;
  for (const auto& x : enumerate_interpretations(three))
    if (is_input_answer_set(prog, three.atoms, x)) input.insert(x);

  criterion(1,
            stable == std::set<Interpretation>{{"a"}, {"b"}} &&
                input == std::set<Interpretation>{
                             {"a"}, {"b"}, {"a", "c"}, {"b", "c"}},
            "answer sets and input answer sets of the even loop");
}

// -------------------------------------------------------------- criterion 2

const char* kCasText =
    "var x int 0 2\n"
    "atom xnz := x != 0.\n"
    "a :- not b.\n"
    "b :- not a.\n"
    ":- a, xnz.\n";

void check_cas_extended_answer_sets() {
  EwSystem sys = driver::lower_input("cc21", kCasText);
  std::set<ExtendedInterpretation> expected{
      {{"a"}, x_is(0)},
      {{"b"}, x_is(0)},
      {{"b", "xnz"}, x_is(1)},
      {{"b", "xnz"}, x_is(2)}};
  criterion(2, as_set(enumerate_extended_models(sys)) == expected,
            "extended answer sets of the constrained even loop");
}

// -------------------------------------------------------------- criterion 3

void check_smt_extended_models() {
  EwSystem sys = frontends::lower_gpw(frontends::parse_gpw(read_file("example6.omt")));
  std::set<ExtendedInterpretation> expected{
      {{"b"}, x_is(0)},
      {{"b", "xnz"}, x_is(1)},
      {{"b", "xnz"}, x_is(2)}};
  criterion(3, as_set(enumerate_extended_models(sys)) == expected,
            "extended models of the three-clause theory");
}

// -------------------------------------------------------------- criterion 4

void check_weighted_maxsmt() {
  Vocabulary vocab;
  vocab.add("a");
  vocab.add("b");
  vocab.add("xnz", AtomKind::Constraint);
  Specification spec;
  spec.add_range("x", 0, 2);
  Denotation denot;
  denot["xnz"] = text::parse_linear_constraint("x != 0", 1);

  auto clause = [&](const std::string& f, std::int64_t w) {
    EwCondition cond;
    cond.module.kind = LogicKind::Smt;
    cond.module.vocab = vocab;
    cond.module.spec = spec;
    cond.module.denot = denot;
    cond.module.formulas.push_back(text::parse_formula(f, 1));
    cond.weight = w;
    return cond;
  };
  std::vector<EwCondition> soft{clause("a or b", 2), clause("not a", 3),
                                clause("not a or not xnz", 1)};

  // Direct route: argmax of the weight sums over all interpretations.
  std::int64_t best = 0;
  bool first = true;
  auto score = [&](const Interpretation& i) {
    std::int64_t s = 0;
    for (const auto& cond : soft)
      if (cond.module.is_model(i)) s += cond.weight;
    return s;
  };
  auto all = enumerate_interpretations(vocab);
  for (const auto& i : all) {
    std::int64_t s = score(i);
    if (first || s > best) best = s;
    first = false;
  }
  std::set<Interpretation> direct;
  for (const auto& i : all)
    if (score(i) == best) direct.insert(i);

  // System route: the hard part admits every interpretation.
  EwSystem sys;
  sys.sense = Sense::Max;
  EModule hard;
  hard.kind = LogicKind::Smt;
  hard.vocab = vocab;
  hard.spec = spec;
  hard.denot = denot;
  sys.hard.push_back(hard);
  sys.soft = soft;
  auto lowered = as_set(optimal_models(sys, Sense::Max));

  std::set<Interpretation> expected{{"b"}, {"b", "xnz"}};
  bool costs_ok = true;
  for (const auto& i : expected)
    costs_ok = costs_ok && level_cost(i, sys, 1) == 6;
  criterion(4, direct == expected && lowered == expected && best == 6 && costs_ok,
            "weighted soft-clause optimum via both routes, total cost 6");
}

// -------------------------------------------------------------- criterion 5

void check_soft_assertion_table() {
  EwSystem sys = driver::lower_input("gpw", read_file("figure1.gpw"));
  std::map<Interpretation, std::int64_t> table;
  for (const auto& i : enumerate_models(sys)) table[i] = level_cost(i, sys, 1);
  std::map<Interpretation, std::int64_t> expected{
      {{}, 5}, {{"a1", "a2"}, 3}, {{"a1"}, 0}};
  auto opt = optimal_models(sys, Sense::Max);

  driver::SolveRequest req;
  auto out = driver::solve_to_json(sys, req);
  bool json_ok = out["models"].size() == 1 &&
                 out["models"][0]["atoms"].empty() &&
                 out["models"][0]["costs"] ==
                     io::ordered_json::object({{"1", "5"}});
  criterion(5,
            table == expected && opt.size() == 1 && opt[0].empty() && json_ok,
            "soft-assertion model/cost table with optimum at the empty model");
}

// -------------------------------------------------------------- criterion 6

void check_omt() {
  EwSystem sys = driver::lower_input("omt", read_file("example6.omt"));
  auto opt = optimal_extended_models(sys, Sense::Min);
  criterion(6,
            as_set(opt) == std::set<ExtendedInterpretation>{{{"b"}, x_is(0)}},
            "objective-variable minimum picks the x = 0 model");
}

// -------------------------------------------------------------- criterion 7

void check_oprogram() {
  EwSystem sys = driver::lower_input("op", read_file("program17.op"));
  auto opt = optimal_models(sys, Sense::Min);
  criterion(7, as_set(opt) == std::set<Interpretation>{{"a"}},
            "negative-weight weak constraint selects {a}");
}

// -------------------------------------------------------------- criterion 8

void check_cc22() {
  EwSystem sys = driver::lower_input("cc22", read_file("quoted.cc22"));
  auto opt = optimal_extended_models(sys, Sense::Min);
  bool optimum_ok =
      as_set(opt) ==
      std::set<ExtendedInterpretation>{{{"q", "a"}, x_is(1)}};

  // The branch with both atoms false bottoms out at x = 5.
  std::int64_t best_empty = -1;
  for (const auto& em : enumerate_extended_models(sys))
    if (em.interp.empty() &&
        (best_empty < 0 || em.eval.at("x") < best_empty))
      best_empty = em.eval.at("x");
  criterion(8, optimum_ok && best_empty == 5,
            "tabled quadratic bound optimum and its empty-branch floor");
}

// -------------------------------------------------------------- criterion 9

void check_cc3() {
  EwSystem sys = driver::lower_input("cc3", read_file("derived.cc3"));
  auto opt = optimal_extended_models(sys, Sense::Min);
  bool optimum_ok =
      as_set(opt) == std::set<ExtendedInterpretation>{{{"d"}, x_is(1)}};
  bool cost_ok =
      !opt.empty() &&
      level_cost_extended(opt[0].interp, opt[0].eval, sys, 1) == Rational(3);

  // Direct route: domination over the per-level objective sums 2x + 1.
  const EModule& cas = sys.hard[0];
  std::vector<ExtendedInterpretation> answer_sets;
  for (const auto& i : enumerate_interpretations(cas.vocab))
    for (const auto& e : enumerate_evaluations(cas.spec))
      if (cas.member(i, e)) answer_sets.push_back({i, e});
  std::set<ExtendedInterpretation> direct;
  for (const auto& em : answer_sets) {
    bool dominated = false;
    for (const auto& other : answer_sets)
      if (2 * other.eval.at("x") + 1 < 2 * em.eval.at("x") + 1)
        dominated = true;
    if (!dominated) direct.insert(em);
  }
  criterion(9, optimum_ok && cost_ok && direct == as_set(opt),
            "leveled linear objective agrees with direct domination");
}

// ------------------------------------------------------------- criterion 10

void check_ilp() {
  EwSystem sys = driver::lower_input("ilp", read_file("derived.ilp"));
  auto opt = optimal_extended_models(sys, Sense::Max);

  // Brute-force oracle over the 16 lattice points.
  std::set<Evaluation> best_points;
  std::int64_t best = -1;
  for (std::int64_t x = 0; x <= 3; ++x)
    for (std::int64_t y = 0; y <= 3; ++y) {
      if (x + y > 3) continue;
      if (x + y > best) {
        best = x + y;
        best_points.clear();
      }
      if (x + y == best) best_points.insert({{"x", x}, {"y", y}});
    }

  std::set<Evaluation> found;
  bool interps_empty = true;
  for (const auto& em : opt) {
    found.insert(em.eval);
    interps_empty = interps_empty && em.interp.empty();
  }
  bool costs_ok = true;
  for (const auto& em : opt)
    costs_ok = costs_ok &&
               level_cost_extended(em.interp, em.eval, sys, 1) == Rational(3);
  criterion(10,
            opt.size() == 4 && interps_empty && best == 3 &&
                found == best_points && costs_ok,
            "four lattice optima at objective 3, against the brute force");
}

// ------------------------------------------------------------- criterion 11

void check_property_suite() {
  verify::VerifyReport report = verify::run_verify(verify::RandomSystemParams{});
  if (!report.ok()) std::cerr << report.str();
  criterion(11, report.ok() && report.trials == 200,
            "randomized property suite, 200 trials, zero failures");
}

// ------------------------------------------------------------- criterion 12

void check_determinism() {
  struct Instance {
    const char* format;
    const char* file;
    bool extended;
  };
  std::vector<Instance> instances{
      {"cc22", "quoted.cc22", true},
      {"cc3", "derived.cc3", true},
      {"gpw", "figure1.gpw", false},
      {"omt", "example6.omt", true},
      {"op", "program17.op", false},
      {"ilp", "derived.ilp", true},
      {"wcnf", "small.wcnf", false}};
  bool identical = true;
  auto check_pair = [&](const EwSystem& sys, bool extended,
                        const std::string& tag) {
    driver::SolveRequest one;
    one.extended = extended;
    one.all = true;
    driver::SolveRequest four = one;
    four.threads = 4;
    if (driver::solve_to_json(sys, one).dump(2) !=
        driver::solve_to_json(sys, four).dump(2)) {
      identical = false;
      std::cerr << "worker-count divergence on " << tag << "\n";
    }
  };
  check_pair(driver::lower_input("cc21", kCasText), true, "cc21 instance");
  for (const auto& inst : instances) {
    EwSystem sys = driver::lower_input(inst.format, read_file(inst.file));
    check_pair(sys, inst.extended, inst.file);
  }
  criterion(12, identical, "byte-identical output across worker counts");
}

}  // namespace

int main() {
  try {
    check_answer_sets();
    check_cas_extended_answer_sets();
    check_smt_extended_models();
    check_weighted_maxsmt();
    check_soft_assertion_table();
    check_omt();
    check_oprogram();
    check_cc22();
    check_cc3();
    check_ilp();
    check_property_suite();
    check_determinism();
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 1;
  }
  return all_pass ? 0 : 1;
}
