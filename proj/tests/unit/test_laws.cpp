#include "doctest.h"
#include "support.hpp"

#include "hfa/error.hpp"
#include "hfa/laws.hpp"
#include "hfa/report.hpp"

#include <set>
#include <sstream>

using namespace hfa;
using test::H;
using test::single;

namespace {

GeneratorConfig small_config(std::size_t trials) {
  GeneratorConfig c;
  c.trials = trials;
  return c;
}

}  // namespace

TEST_CASE("registry contents") {
  const auto& laws = law_registry();
  std::set<std::string> ids;
  std::size_t proved = 0, refuted = 0;
  for (const Law& law : laws) {
    CHECK_MESSAGE(ids.insert(law.id).second, "duplicate id " << law.id);
    CHECK_FALSE(law.statement.empty());
    CHECK(law.arity() > 0);
    (law.status == LawStatus::proved ? proved : refuted)++;
    if (law.status == LawStatus::refuted) CHECK_MESSAGE(!law.fixtures.empty(), law.id);
    if (law.status == LawStatus::proved) CHECK(static_cast<bool>(law.sampler));
  }
  CHECK(proved >= 95);
  CHECK(refuted >= 15);
  CHECK(find_law("prop2.9").status == LawStatus::proved);
  CHECK(find_law("exam-sec2.6-distrib-m").status == LawStatus::refuted);
  CHECK(find_law("prop13.1").statement == "if (A ⊂ₚ B) and (B ⊂ₚ C) then A ⊂ₚ C");
  CHECK_THROWS_AS(find_law("nope"), InvalidArgument);
  CHECK(to_string(LawStatus::refuted) == "refuted");
}

TEST_CASE("evaluate_law") {
  const Law& law = find_law("exam-sec2.3-m-intersection");
  const Verdict v = evaluate_law(law, law.fixtures.front().binding);
  CHECK(v.guard);
  CHECK_FALSE(v.claim);
  CHECK(v.violated());

  Binding b;
  b.set("A", single(H({"0.3"})));
  b.set("B", single(H({"0.5"})));
  b.set("C", single(H({"0.9"})));
  CHECK(evaluate_law(find_law("prop13.1"), b) == Verdict{true, true});
  b.set("C", single(H({"0.4"})));
  CHECK(evaluate_law(find_law("prop13.1"), b) == Verdict{false, true});

  Binding missing;
  missing.set("A", single(H({"0.3"})));
  CHECK_THROWS_WITH_AS(evaluate_law(find_law("prop13.1"), missing), doctest::Contains("B"), InvalidArgument);
  missing.set("B", single(H({"0.3"}), "y"));
  missing.set("C", single(H({"0.3"})));
  CHECK_THROWS_AS(evaluate_law(find_law("prop13.1"), missing), UniverseMismatch);
}

TEST_CASE("generator config validation") {
  GeneratorConfig c;
  CHECK_NOTHROW(c.validate());
  c.degree_grid = 0;
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
  c = {};
  c.cardinality = {3, 2};
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
  c = {};
  c.universe_size = {0, 2};
  CHECK_THROWS_AS(c.validate(), InvalidArgument);
}

TEST_CASE("random generation is deterministic and on the grid") {
  GeneratorConfig c;
  CHECK(random_hfs(c, 7) == random_hfs(c, 7));
  CHECK_FALSE(random_hfs(c, 7) == random_hfs(c, 8));
  for (std::uint64_t i = 0; i < 200; ++i) {
    const Hfs h = random_hfs(c, i);
    CHECK(h.universe().size() >= 1);
    CHECK(h.universe().size() <= 4);
    for (const Hfe& m : h.memberships()) {
      CHECK(m.size() <= 6);
      for (Degree d : m.degrees()) CHECK(100 % d.denominator() == 0);
    }
  }
  c.degree_grid = 1;
  for (std::uint64_t i = 0; i < 50; ++i) {
    const Hfs h = random_hfs(c, i);
    for (const Hfe& m : h.memberships())
      for (Degree d : m.degrees()) CHECK((d == Degree::zero() || d == Degree::one()));
  }

  Rng r1(5), r2(5);
  for (int i = 0; i < 100; ++i) CHECK(r1.uniform(3, 9) == r2.uniform(3, 9));
  Rng r(11);
  for (int i = 0; i < 1000; ++i) {
    const auto v = r.uniform(3, 9);
    CHECK((v >= 3 && v <= 9));
  }
  CHECK(stream_seed(1, "a", 0) != stream_seed(1, "b", 0));
  CHECK(stream_seed(1, "a", 0) != stream_seed(1, "a", 1));
  CHECK(numbered_universe(3) == Universe({"x1", "x2", "x3"}));
}

TEST_CASE("suite runs") {
  const LawReport empty = run_suite(small_config(0));
  CHECK(empty.passed());
  CHECK(empty.results.size() == law_registry().size());
  for (const LawResult& r : empty.results) CHECK(r.trials == 0);

  RunOptions only;
  only.only = {"thm1.1", "exam-sec2.3-m-union"};
  const LawReport some = run_suite(small_config(50), only);
  REQUIRE(some.results.size() == 2);
  CHECK(some.passed());
  CHECK(some.results[0].trials == 50);
  CHECK(some.count(LawStatus::refuted) == 1);
  CHECK(some.total_violations() == 0);

  only.only = {"bogus"};
  CHECK_THROWS_AS(run_suite(small_config(1), only), InvalidArgument);
}

TEST_CASE("hunting") {
  CHECK_FALSE(hunt_counterexample("prop13.1", small_config(2000)).has_value());
  CHECK_FALSE(hunt_counterexample("exam-sec2.3-m-intersection", small_config(0)).has_value());
  CHECK_THROWS_AS(hunt_counterexample("nope", small_config(1)), InvalidArgument);

  const auto w = hunt_counterexample("exam-sec2.3-m-intersection", small_config(100'000));
  REQUIRE(w.has_value());
  CHECK(w->verdict.violated());
  CHECK(w->law_id == "exam-sec2.3-m-intersection");
  // Replay.
  CHECK(evaluate_law(find_law(w->law_id), w->binding) == w->verdict);
  // Through JSON.
  CHECK(evaluate_law(find_law(w->law_id), binding_from_json(binding_to_json(w->binding))) == w->verdict);
  // Same config, same witness.
  const auto again = hunt_counterexample("exam-sec2.3-m-intersection", small_config(100'000));
  REQUIRE(again.has_value());
  CHECK(again->trial == w->trial);
  CHECK(again->binding == w->binding);
}

TEST_CASE("trace output") {
  const Law& law = find_law("exam-sec2.3-m-intersection");
  std::ostringstream out;
  write_trace(law, law.fixtures.front().binding, out);
  const std::string text = out.str();
  CHECK(text.find("exam-sec2.3-m-intersection [refuted]") != std::string::npos);
  CHECK(text.find("8/15") != std::string::npos);
  CHECK(text.find("9/20") != std::string::npos);
  CHECK(text.find("guard: none") != std::string::npos);
}

TEST_CASE("predicate text") {
  using namespace dsl;
  CHECK(rel(RelationKind::mean, "A∩B", "A").text() == "A∩B ⊂ₘ A");
  CHECK(implies(always(), always()).eval(Binding{}));
  CHECK_THROWS_AS(rel(RelationKind::possible, "A", "B").eval(Binding{}), InvalidArgument);
}
