#include <catch2/catch_amalgamated.hpp>

#include "ews/core.hpp"
#include "ews/rational.hpp"

using namespace ews;

TEST_CASE("rational arithmetic stays normalized") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK((Rational(1, 2) + Rational(1, 3)) == Rational(5, 6));
  CHECK((Rational(1, 2) - Rational(1, 2)).is_zero());
  CHECK((Rational(2, 3) * Rational(3, 4)) == Rational(1, 2));
  CHECK(-Rational(1, 2) == Rational(-1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational string forms") {
  CHECK(Rational(7).str() == "7");
  CHECK(Rational(-3, 2).str() == "-3/2");
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-3/2") == Rational(-3, 2));
  CHECK(Rational::parse("4/8") == Rational(1, 2));
}

TEST_CASE("vocabulary keeps order and rejects duplicates") {
  Vocabulary v;
  v.add("b");
  v.add("a", AtomKind::Constraint);
  CHECK(v.atoms == std::vector<std::string>{"b", "a"});
  CHECK(v.kind_of("a") == AtomKind::Constraint);
  CHECK(v.regular_atoms() == std::vector<std::string>{"b"});
  CHECK(v.constraint_atoms() == std::vector<std::string>{"a"});
  CHECK_THROWS_AS(v.add("b"), SignatureError);
  CHECK_THROWS_AS(v.kind_of("zzz"), SignatureError);

  Vocabulary w;
  w.add("a");  // regular here, constraint in v
  CHECK_THROWS_AS(w.merge(v), SignatureError);
}

TEST_CASE("specification domains are sorted and deduplicated") {
  Specification s;
  s.add("x", {3, 1, 2, 1});
  CHECK(s.domain_of("x") == std::vector<std::int64_t>{1, 2, 3});
  CHECK_THROWS_AS(s.add("x", {1}), SignatureError);
  CHECK_THROWS_AS(s.add("y", {}), SignatureError);
  CHECK_THROWS_AS(s.add_range("y", 2, 1), SignatureError);

  Specification t;
  t.add("x", {1, 2});
  CHECK_THROWS_AS(t.merge(s), SignatureError);  // domain mismatch on x
  Specification u;
  u.add("x", {1, 2, 3});
  u.merge(s);  // identical domain is fine
  CHECK(u.size() == 1);
}

TEST_CASE("interpretation enumeration is canonical") {
  Vocabulary v;
  v.add("a");
  v.add("b");
  auto all = enumerate_interpretations(v);
  REQUIRE(all.size() == 4);
  CHECK(all[0] == Interpretation{});
  CHECK(all[1] == Interpretation{"a"});
  CHECK(all[2] == Interpretation{"b"});
  CHECK(all[3] == Interpretation{"a", "b"});
}

TEST_CASE("evaluation enumeration is mixed radix, first variable slowest") {
  Specification s;
  s.add_range("x", 0, 1);
  s.add_range("y", 5, 7);
  auto all = enumerate_evaluations(s);
  REQUIRE(all.size() == 6);
  CHECK(all[0] == Evaluation{{"x", 0}, {"y", 5}});
  CHECK(all[1] == Evaluation{{"x", 0}, {"y", 6}});
  CHECK(all[2] == Evaluation{{"x", 0}, {"y", 7}});
  CHECK(all[3] == Evaluation{{"x", 1}, {"y", 5}});
  CHECK(all[5] == Evaluation{{"x", 1}, {"y", 7}});
}

TEST_CASE("projections restrict to the requested signature") {
  Vocabulary sub;
  sub.add("a");
  CHECK(project_interpretation({"a", "b"}, sub) == Interpretation{"a"});
  Evaluation e{{"x", 1}, {"y", 2}};
  CHECK(project_evaluation(e, {"y"}) == Evaluation{{"y", 2}});
  CHECK_THROWS_AS(project_evaluation(e, {"z"}), SignatureError);
}

TEST_CASE("state caps throw instead of truncating") {
  CHECK(checked_pow2(3, 100) == 8);
  CHECK_THROWS_AS(checked_pow2(10, 100), CapExceeded);
  Specification s;
  s.add_range("x", 0, 9);
  s.add_range("y", 0, 9);
  CHECK(evaluation_count(s, 1000) == 100);
  CHECK_THROWS_AS(evaluation_count(s, 50), CapExceeded);
}
