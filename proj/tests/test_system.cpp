#include <catch2/catch_amalgamated.hpp>

#include "ews/solver.hpp"
#include "ews/textparse.hpp"

using namespace ews;

namespace {

EwSystem two_level_system() {
  // Hard: all interpretations over {a, b}.  Soft: (a, 2@1), (b, 1@3).
  EwSystem sys;
  Vocabulary v;
  v.add("a");
  v.add("b");
  sys.hard.push_back(universal_module(v, Specification{}));
  auto cond = [&](const std::string& atom, std::int64_t w, int l) {
    EwCondition c;
    c.module.kind = LogicKind::Pl;
    c.module.vocab = v;
    c.module.formulas.push_back(PropFormula::atom(atom));
    c.weight = w;
    c.level = l;
    return c;
  };
  sys.soft.push_back(cond("a", 2, 1));
  sys.soft.push_back(cond("b", 1, 3));
  return sys;
}

}  // namespace

TEST_CASE("levels are collected ascending and succ_level walks them") {
  EwSystem sys = two_level_system();
  CHECK(levels(sys) == std::vector<int>{1, 3});
  CHECK(succ_level(sys, 1) == 3);
  CHECK_FALSE(succ_level(sys, 3).has_value());
  CHECK_THROWS_AS(succ_level(sys, 2), SignatureError);
}

TEST_CASE("plain level costs sum the satisfied conditions' weights") {
  EwSystem sys = two_level_system();
  CHECK(level_cost({"a", "b"}, sys, 1) == 2);
  CHECK(level_cost({"a", "b"}, sys, 3) == 1);
  CHECK(level_cost({}, sys, 1) == 0);
  CHECK(level_cost({"b"}, sys, 1) == 0);
}

TEST_CASE("extended costs add the coefficient dot product") {
  EwSystem sys;
  Specification spec;
  spec.add_range("x", 0, 3);
  sys.hard.push_back(universal_module(Vocabulary{}, spec));
  EwCondition cond;
  cond.module = universal_module(Vocabulary{}, spec);
  cond.weight = 5;
  cond.coeffs["x"] = Rational(1, 2);
  sys.soft.push_back(cond);
  CHECK(level_cost_extended({}, {{"x", 3}}, sys, 1) == Rational(13, 2));
  CHECK(level_cost_extended({}, {{"x", 0}}, sys, 1) == Rational(5));
  // The plain reading ignores coefficients entirely.
  CHECK(level_cost({}, sys, 1) == 5);
}

TEST_CASE("condition cost is zero when the module rejects the candidate") {
  Specification spec;
  spec.add_range("x", 0, 3);
  EwCondition cond;
  cond.module.kind = LogicKind::Icsp;
  cond.module.spec = spec;
  cond.module.constraints.push_back(text::parse_linear_constraint("x >= 2", 1));
  cond.weight = 7;
  cond.coeffs["x"] = Rational(1);
  CHECK(cost_model({}, cond) == 7);  // some evaluation satisfies x >= 2
  CHECK(cost_extended({}, {{"x", 3}}, cond) == Rational(3));
  CHECK(cost_extended({}, {{"x", 1}}, cond) == Rational(0));
}

TEST_CASE("coherence rejects soft parts escaping the hard signature") {
  EwSystem sys;
  Vocabulary v;
  v.add("a");
  sys.hard.push_back(universal_module(v, Specification{}));

  EwCondition cond;
  cond.module.kind = LogicKind::Pl;
  cond.module.vocab.add("outside");
  cond.module.formulas.push_back(PropFormula::atom("outside"));
  sys.soft.push_back(cond);
  CHECK_FALSE(check_coherence(sys).ok());

  sys.soft.clear();
  EwCondition bad_level;
  bad_level.module = universal_module(v, Specification{});
  bad_level.level = 0;
  sys.soft.push_back(bad_level);
  CHECK_FALSE(check_coherence(sys).ok());

  sys.soft.clear();
  EwCondition bad_coeff;
  bad_coeff.module = universal_module(Vocabulary{}, Specification{});
  bad_coeff.coeffs["x"] = Rational(1);  // not a module variable
  sys.soft.push_back(bad_coeff);
  CHECK_FALSE(check_coherence(sys).ok());
}

TEST_CASE("coherence rejects hard modules disagreeing on domains") {
  EwSystem sys;
  Specification s1, s2;
  s1.add_range("x", 0, 1);
  s2.add_range("x", 0, 2);
  sys.hard.push_back(universal_module(Vocabulary{}, s1));
  sys.hard.push_back(universal_module(Vocabulary{}, s2));
  CHECK_FALSE(check_coherence(sys).ok());
}

TEST_CASE("signature unions the hard modules") {
  EwSystem sys = two_level_system();
  Specification spec;
  spec.add_range("x", 0, 1);
  sys.hard.push_back(universal_module(Vocabulary{}, spec));
  auto sig = signature(sys);
  CHECK(sig.vocab.atoms == std::vector<std::string>{"a", "b"});
  CHECK(sig.spec.variables == std::vector<std::string>{"x"});
  CHECK(check_coherence(sys).ok());
}
