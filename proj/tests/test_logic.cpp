#include <catch2/catch_amalgamated.hpp>

#include "ews/module.hpp"
#include "ews/textparse.hpp"

using namespace ews;

TEST_CASE("formula parsing and evaluation") {
  PropFormula f = text::parse_formula("a and not b -> c or d", 1);
  CHECK(f.eval({"c"}));
  CHECK(f.eval({"b"}));          // antecedent fails
  CHECK_FALSE(f.eval({"a"}));    // antecedent holds, consequent fails
  CHECK(f.eval({"a", "d"}));
  CHECK(f.str() == "(a and (not b)) -> (c or d)");

  CHECK_THROWS_AS(text::parse_formula("a and", 3), ParseError);
  CHECK_THROWS_AS(text::parse_formula("(a or b", 3), ParseError);
}

TEST_CASE("formula shape predicates") {
  CHECK(text::parse_formula("a", 1).is_literal());
  CHECK(text::parse_formula("not a", 1).is_literal());
  CHECK(text::parse_formula("a or not b", 1).is_clause());
  CHECK_FALSE(text::parse_formula("a and b", 1).is_clause());
  CHECK(text::parse_formula("a and not b", 1).is_literal_conjunction());
  CHECK_FALSE(text::parse_formula("a -> b", 1).is_literal_conjunction());
}

TEST_CASE("linear constraints normalize both sides") {
  LinearConstraint lc = text::parse_linear_constraint("2*x + 1 <= y - 3", 1);
  // 2x - y <= -4
  REQUIRE(lc.terms.size() == 2);
  CHECK(lc.rel == Rel::Le);
  CHECK(lc.rhs == -4);
  CHECK(satisfies_constraint({{"x", 0}, {"y", 4}}, lc));
  CHECK_FALSE(satisfies_constraint({{"x", 0}, {"y", 3}}, lc));
}

TEST_CASE("constraint complement partitions the evaluation space") {
  Specification spec;
  spec.add_range("x", 0, 2);

  Constraint lin = text::parse_linear_constraint("x != 0", 1);
  Constraint lin_comp = complement_constraint(lin, spec);
  for (const auto& e : enumerate_evaluations(spec))
    CHECK(satisfies_constraint(e, lin) != satisfies_constraint(e, lin_comp));

  ExtensionalConstraint ext;
  ext.tuple = {"x"};
  ext.allowed = {{0}, {2}};
  Constraint ext_comp = complement_constraint(ext, spec);
  CHECK(std::get<ExtensionalConstraint>(ext_comp).allowed ==
        std::set<std::vector<std::int64_t>>{{1}});
}

TEST_CASE("reduct and answer sets of the even loop") {
  // a :- not b.  b :- not a.
  LogicProgram prog{Rule{"a", {}, {"b"}}, Rule{"b", {}, {"a"}}};
  CHECK(is_answer_set(prog, {"a"}));
  CHECK(is_answer_set(prog, {"b"}));
  CHECK_FALSE(is_answer_set(prog, {}));
  CHECK_FALSE(is_answer_set(prog, {"a", "b"}));

  LogicProgram red = reduct(prog, {"a"});
  REQUIRE(red.size() == 1);
  CHECK(red[0].head == "a");
  CHECK(red[0].neg.empty());
}

TEST_CASE("falsum rules prune candidate sets") {
  // a :- not b.  :- a.
  LogicProgram prog{Rule{"a", {}, {"b"}}, Rule{std::nullopt, {"a"}, {}}};
  CHECK_FALSE(is_answer_set(prog, {"a"}));
  CHECK_FALSE(is_answer_set(prog, {}));  // a is derivable but missing
}

TEST_CASE("input answer sets treat non-head atoms as facts") {
  LogicProgram prog{Rule{"a", {}, {"b"}}, Rule{"b", {}, {"a"}}};
  std::vector<std::string> vocab{"a", "b", "c"};
  std::set<Interpretation> found;
  Vocabulary v;
  for (const auto& a : vocab) v.add(a);
  for (const auto& x : enumerate_interpretations(v))
    if (is_input_answer_set(prog, vocab, x)) found.insert(x);
  CHECK(found == std::set<Interpretation>{
                     {"a"}, {"b"}, {"a", "c"}, {"b", "c"}});
  CHECK_THROWS_AS(is_input_answer_set(prog, {"a"}, {"zzz"}), SignatureError);
}

namespace {

EModule example_smt_module() {
  // Clauses a or b, not a, not a or not xnz, with xnz denoting x != 0
  // over x in {0,1,2}.
  EModule m;
  m.kind = LogicKind::Smt;
  m.vocab.add("a");
  m.vocab.add("b");
  m.vocab.add("xnz", AtomKind::Constraint);
  m.spec.add_range("x", 0, 2);
  m.denot["xnz"] = text::parse_linear_constraint("x != 0", 1);
  m.formulas.push_back(text::parse_formula("a or b", 1));
  m.formulas.push_back(text::parse_formula("not a", 1));
  m.formulas.push_back(text::parse_formula("not a or not xnz", 1));
  return m;
}

}  // namespace

TEST_CASE("smt membership imposes the side condition on used atoms") {
  EModule m = example_smt_module();
  std::set<ExtendedInterpretation> members;
  for (const auto& i : enumerate_interpretations(m.vocab))
    for (const auto& e : enumerate_evaluations(m.spec))
      if (m.member(i, e)) members.insert({i, e});
  CHECK(members == std::set<ExtendedInterpretation>{
                       {{"b"}, {{"x", 0}}},
                       {{"b", "xnz"}, {{"x", 1}}},
                       {{"b", "xnz"}, {{"x", 2}}}});
}

TEST_CASE("nonstrict mode frees false constraint atoms") {
  EModule m = example_smt_module();
  m.mode = AtomMode::NonStrict;
  // {b} with x = 1 is now a member: the false xnz imposes nothing.
  CHECK(m.member({"b"}, {{"x", 1}}));
  // A true constraint atom still imposes its constraint.
  CHECK_FALSE(m.member({"b", "xnz"}, {{"x", 0}}));
}

TEST_CASE("cas membership combines stability and the side condition") {
  // a :- not b.  b :- not a.  :- a, xnz.  with xnz as above.
  EModule m;
  m.kind = LogicKind::Cas;
  m.vocab.add("a");
  m.vocab.add("b");
  m.vocab.add("xnz", AtomKind::Constraint);
  m.spec.add_range("x", 0, 2);
  m.denot["xnz"] = text::parse_linear_constraint("x != 0", 1);
  m.program = {Rule{"a", {}, {"b"}}, Rule{"b", {}, {"a"}},
               Rule{std::nullopt, {"a", "xnz"}, {}}};
  std::set<ExtendedInterpretation> members;
  for (const auto& i : enumerate_interpretations(m.vocab))
    for (const auto& e : enumerate_evaluations(m.spec))
      if (m.member(i, e)) members.insert({i, e});
  CHECK(members == std::set<ExtendedInterpretation>{
                       {{"a"}, {{"x", 0}}},
                       {{"b"}, {{"x", 0}}},
                       {{"b", "xnz"}, {{"x", 1}}},
                       {{"b", "xnz"}, {{"x", 2}}}});
}

TEST_CASE("cas regular atoms outside rule heads are rejected") {
  EModule m;
  m.kind = LogicKind::Cas;
  m.vocab.add("a");
  m.vocab.add("stray");
  m.program = {Rule{"a", {}, {}}};
  CHECK(m.member({"a"}, {}));
  CHECK_FALSE(m.member({"a", "stray"}, {}));
}

TEST_CASE("icsp membership requires the empty interpretation") {
  EModule m;
  m.kind = LogicKind::Icsp;
  m.spec.add_range("x", 0, 3);
  m.constraints.push_back(text::parse_linear_constraint("x >= 2", 1));
  CHECK(m.member({}, {{"x", 2}}));
  CHECK_FALSE(m.member({}, {{"x", 1}}));
  CHECK(is_icsp_solution(m, {{"x", 3}}));
}

TEST_CASE("complemented modules negate membership pointwise") {
  EModule m;
  m.kind = LogicKind::Pl;
  m.vocab.add("a");
  m.formulas.push_back(PropFormula::atom("a"));
  EModule c = m;
  c.complemented = true;
  CHECK(m.member({"a"}, {}));
  CHECK_FALSE(c.member({"a"}, {}));
  CHECK_FALSE(m.member({}, {}));
  CHECK(c.member({}, {}));
}

TEST_CASE("universal modules accept everything") {
  Specification spec;
  spec.add_range("x", 0, 1);
  Vocabulary v;
  v.add("a");
  EModule m = universal_module(v, spec);
  for (const auto& i : enumerate_interpretations(v))
    for (const auto& e : enumerate_evaluations(spec)) CHECK(m.member(i, e));
}
