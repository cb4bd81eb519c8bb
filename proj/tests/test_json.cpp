#include <catch2/catch_amalgamated.hpp>

#include "ews/driver.hpp"
#include "ews/json_io.hpp"

using namespace ews;

namespace {

template <typename T>
std::set<T> as_set(const std::vector<T>& v) {
  return {v.begin(), v.end()};
}

EwSystem sample_system() {
  EwSystem sys;
  sys.sense = Sense::Max;
  EModule hard;
  hard.kind = LogicKind::Smt;
  hard.vocab.add("a");
  hard.vocab.add("c", AtomKind::Constraint);
  hard.spec.add_range("x", 0, 2);
  hard.denot["c"] = LinearConstraint{{{1, "x"}}, Rel::Ge, 1};
  hard.formulas.push_back(PropFormula::implies(PropFormula::atom("a"),
                                               PropFormula::atom("c")));
  sys.hard.push_back(hard);

  EwCondition cond;
  cond.module = universal_module(Vocabulary{}, hard.spec);
  cond.weight = 2;
  cond.coeffs["x"] = Rational(-1, 3);
  cond.level = 2;
  sys.soft.push_back(cond);
  return sys;
}

}  // namespace

TEST_CASE("systems survive a save/load round trip") {
  EwSystem sys = sample_system();
  EwSystem back = io::load_system(io::save_system(sys));
  CHECK(back.sense == sys.sense);
  CHECK(back.mode == sys.mode);
  REQUIRE(back.soft.size() == 1);
  CHECK(back.soft[0].weight == 2);
  CHECK(back.soft[0].level == 2);
  CHECK(back.soft[0].coeffs.at("x") == Rational(-1, 3));
  CHECK(as_set(enumerate_extended_models(back)) ==
        as_set(enumerate_extended_models(sys)));
  for (Sense sense : {Sense::Max, Sense::Min})
    CHECK(as_set(optimal_extended_models(back, sense)) ==
          as_set(optimal_extended_models(sys, sense)));
  // Serialization is stable across a second round trip.
  CHECK(io::save_system(back) == io::save_system(sys));
}

TEST_CASE("lowered dialects survive the round trip too") {
  for (auto [format, input] :
       {std::pair<std::string, std::string>{"op", "a :- not b.\nb :- not a.\n"
                                                  ":~ b. [1@1]\n"},
        {"wcnf", "p wcnf 2 2 9\n9 1 2 0\n4 -1 0\n"},
        {"ilp", "maximize x\nsubject to\nx <= 2\nbounds x 0 3\n"},
        {"cc3", "var x int 1 3\natom d := x >= 1.\n$minimize{2*x + 1 @ 1}.\n"}}) {
    EwSystem sys = driver::lower_input(format, input);
    EwSystem back = io::load_system(io::save_system(sys));
    INFO(format);
    CHECK(as_set(optimal_extended_models(back, back.sense)) ==
          as_set(optimal_extended_models(sys, sys.sense)));
  }
}

TEST_CASE("documents with unknown fields are rejected") {
  auto j = io::system_to_json(sample_system());
  j["surprise"] = 1;
  CHECK_THROWS_AS(io::system_from_json(j), ParseError);

  auto j2 = io::system_to_json(sample_system());
  j2["soft"][0]["extra"] = true;
  CHECK_THROWS_AS(io::system_from_json(j2), ParseError);
}

TEST_CASE("version and enum fields are validated") {
  auto j = io::system_to_json(sample_system());
  j["version"] = "ews/999";
  CHECK_THROWS_AS(io::system_from_json(j), ParseError);

  auto j2 = io::system_to_json(sample_system());
  j2["sense"] = "sideways";
  CHECK_THROWS_AS(io::system_from_json(j2), ParseError);

  auto j3 = io::system_to_json(sample_system());
  j3["hard"][0]["logic"] = "quantum";
  CHECK_THROWS_AS(io::system_from_json(j3), ParseError);
}

TEST_CASE("modules may only reference declared names") {
  auto j = io::system_to_json(sample_system());
  j["hard"][0]["atoms"].push_back("ghost");
  CHECK_THROWS_AS(io::system_from_json(j), ParseError);

  auto j2 = io::system_to_json(sample_system());
  j2["hard"][0]["variables"].push_back("ghost");
  CHECK_THROWS_AS(io::system_from_json(j2), ParseError);
}

TEST_CASE("incoherent documents fail at load time") {
  auto j = io::system_to_json(sample_system());
  j["soft"][0]["level"] = 0;
  CHECK_THROWS_AS(io::system_from_json(j), SignatureError);
}

TEST_CASE("invalid json reports a parse error") {
  CHECK_THROWS_AS(io::load_system("{"), ParseError);
  CHECK_THROWS_AS(io::load_system("[]"), ParseError);
}
