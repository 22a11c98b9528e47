#include "doctest.h"
#include "support.hpp"

#include "hfa/error.hpp"
#include "hfa/relations.hpp"

using namespace hfa;
using test::D;
using test::H;
using test::single;

namespace {

const Hfe x1 = H({"0.9", "0.2"}), x2 = H({"0.6", "0.6", "0.5"}), x3 = H({"0.7", "0.5", "0.5"}),
          x4 = H({"0.8", "0.6", "0.5"}), x5 = H({"0.9", "0.3", "0.1"}), x6 = H({"0.9", "0.8", "0.7"});

}  // namespace

TEST_CASE("expert example verdicts") {
  CHECK(element_relation(RelationKind::possible, x2, x1));
  CHECK(element_relation(RelationKind::mean, x1, x2));
  CHECK_FALSE(element_relation(RelationKind::mean, x2, x1));
  CHECK(element_relation(RelationKind::acceptable, x2, x3));
  CHECK(element_relation(RelationKind::strong, x3, x4));
  CHECK(element_relation(RelationKind::truncated, x1, x5));
  CHECK_FALSE(element_relation(RelationKind::strong, x1, x5));
  CHECK(element_relation(RelationKind::necessary, x3, x6));
  CHECK_FALSE(element_relation(RelationKind::necessary, x3, x4));
}

TEST_CASE("dominance and best-q subsequences") {
  const Hfe w = H({"0.9", "0.8", "0.7", "0.65", "0.6", "0.5"});
  CHECK(best_q_subsequence(w, 2) == H({"0.9", "0.8"}));
  CHECK(best_q_subsequence(w, 3) == H({"0.9", "0.8", "0.7"}));
  CHECK(best_q_subsequence(w, 6) == w);
  CHECK_THROWS_AS(best_q_subsequence(w, 0), InvalidArgument);
  CHECK_THROWS_AS(best_q_subsequence(w, 7), InvalidArgument);
  CHECK(dominates(H({"0.7", "0.5"}).degrees(), H({"0.8", "0.5"}).degrees()));
  CHECK_FALSE(dominates(H({"0.7", "0.5"}).degrees(), H({"0.8", "0.4"}).degrees()));
  CHECK_THROWS_AS(dominates(H({"0.7"}).degrees(), H({"0.8", "0.4"}).degrees()), InvalidArgument);
}

TEST_CASE("subsequence is multiset containment") {
  CHECK(is_subsequence(H({"0.5", "0.5"}), H({"0.5", "0.3", "0.5"})));
  CHECK_FALSE(is_subsequence(H({"0.5", "0.5"}), H({"0.5", "0.3"})));
  CHECK(is_subsequence(H({"0.3"}), H({"0.5", "0.3"})));
}

TEST_CASE("combined strong-or-truncated test") {
  CHECK(classify_sot(x3, x4) == SotVerdict::strong);
  CHECK(classify_sot(x1, x5) == SotVerdict::truncated);
  CHECK(classify_sot(x5, x1) == SotVerdict::none);
  CHECK(to_string(SotVerdict::truncated) == "T");
  const RelationProfile p = relation_profile(x3, x6);
  for (RelationKind k : kAllRelationKinds)
    CHECK(p.holds(k) == (k != RelationKind::truncated));
  CHECK(p.sot == SotVerdict::strong);
}

TEST_CASE("relation tags and symbols") {
  for (RelationKind k : kAllRelationKinds) {
    CHECK(relation_kind_from_tag(std::string(1, tag(k))) == k);
    CHECK(relation_kind_from_tag(std::string(1, static_cast<char>(tag(k) - 'a' + 'A'))) == k);
  }
  CHECK(symbol(RelationKind::mean) == "⊂ₘ");
  CHECK_THROWS_AS(relation_kind_from_tag("q"), InvalidArgument);
  CHECK_THROWS_AS(relation_kind_from_tag("mm"), InvalidArgument);
}

TEST_CASE("set-level relations and equalities") {
  const Universe u({"x", "y"});
  const Hfs a(u, {H({"0.6", "0.5", "0.3"}), H({"0.5", "0.3", "0.2"})});
  const Hfs b(u, {H({"0.3", "0.6", "0.5"}), H({"0.2", "0.5", "0.3"})});
  const Hfs c(u, {H({"0.3", "0.3", "0.6", "0.5"}), H({"0.2", "0.5", "0.3"})});
  CHECK(a == b);
  CHECK(a != c);
  CHECK(set_equality(RelationKind::strong, a, b));
  CHECK_FALSE(set_equality(RelationKind::strong, a, c));
  CHECK(set_equality(RelationKind::possible, a, c));
  CHECK(set_relation(RelationKind::strong, c, a));
  CHECK_FALSE(set_relation(RelationKind::strong, a, c));
  CHECK_THROWS_AS(set_equality(RelationKind::truncated, a, b), InvalidArgument);
  CHECK_THROWS_AS(set_relation(RelationKind::mean, a, single(H({"0.1"}))), UniverseMismatch);
}

TEST_CASE("necessary equality forces constant memberships") {
  const Hfs a = single(H({"0.4", "0.4"})), b = single(H({"0.4"})), c = single(H({"0.5", "0.4"}));
  CHECK(set_equality(RelationKind::necessary, a, b));
  CHECK_FALSE(set_equality(RelationKind::necessary, c, c));
}
