#include "doctest.h"
#include "support.hpp"

#include "hfa/error.hpp"
#include "hfa/expr.hpp"

#include <algorithm>

using namespace hfa;
using test::D;
using test::H;
using test::single;

TEST_CASE("universe") {
  const Universe u({"x", "y"});
  CHECK(u.size() == 2);
  CHECK(u.index_of("y") == 1u);
  CHECK_FALSE(u.index_of("z").has_value());
  CHECK(u == Universe({"x", "y"}));
  CHECK_FALSE(u == Universe({"y", "x"}));
  CHECK_THROWS_AS(Universe({}), InvalidArgument);
  CHECK_THROWS_AS(Universe({"x", "x"}), InvalidArgument);
}

TEST_CASE("make_hfs validates coverage") {
  const Universe u({"x", "y"});
  const Hfs a = make_hfs(u, {{"x", {D("0.1")}}, {"y", {D("0.2"), D("0.3")}}});
  CHECK(a.at("y") == H({"0.3", "0.2"}));
  CHECK_THROWS_WITH_AS(make_hfs(u, {{"x", {D("0.1")}}}), doctest::Contains("y"), InvalidArgument);
  CHECK_THROWS_WITH_AS(make_hfs(u, {{"x", {D("0.1")}}, {"y", {D("0.1")}}, {"z", {D("0.1")}}}),
                       doctest::Contains("z"), InvalidArgument);
  CHECK_THROWS_AS(make_hfs(u, {{"x", {D("0.1")}}, {"y", {}}}), InvalidArgument);
  CHECK_THROWS_AS(a.at("z"), InvalidArgument);
  CHECK_THROWS_AS(Hfs(u, {H({"0.1"})}), InvalidArgument);
}

TEST_CASE("pointwise operations") {
  const Universe u({"x", "y"});
  const Hfs a(u, {H({"0.2", "0.5"}), H({"0.9"})});
  const Hfs b(u, {H({"0.3"}), H({"0.1", "0.4"})});
  CHECK(combine(SetOp::union_, a, b) == Hfs(u, {H({"0.5", "0.3"}), H({"0.9"})}));
  CHECK(combine(SetOp::intersection, a, b) == Hfs(u, {H({"0.3", "0.2"}), H({"0.4", "0.1"})}));
  CHECK(complement(a) == Hfs(u, {H({"0.8", "0.5"}), H({"0.1"})}));
  CHECK_THROWS_AS(combine(SetOp::union_, a, single(H({"0.1"}))), UniverseMismatch);
}

TEST_CASE("families") {
  const Hfs a = single(H({"0.1", "0.2", "0.3"})), b = single(H({"0.3", "0.4", "0.5"})),
            c = single(H({"0.3", "0.45", "0.5"}));
  const Family f({{"A", a}, {"B", b}, {"C", c}});
  CHECK(family_fold(SetOp::intersection, f).at(0) == H({"0.3", "0.3", "0.3", "0.2", "0.1"}));
  CHECK(family_fold(SetOp::union_, f).at(0) == H({"0.5", "0.5", "0.45", "0.4", "0.3", "0.3", "0.3"}));
  // Order of members does not matter.
  std::vector<Family::Member> members(f.members().begin(), f.members().end());
  std::sort(members.begin(), members.end(), [](const auto& l, const auto& r) { return l.first > r.first; });
  CHECK(family_fold(SetOp::intersection, Family(members)) == family_fold(SetOp::intersection, f));
  CHECK(family_fold(SetOp::union_, Family({{"A", a}})) == a);

  CHECK(is_subfamily(Family({{"G", b}}), f));
  CHECK_FALSE(is_subfamily(Family({{"G", single(H({"0.3", "0.4"}))}}), f));
  CHECK_FALSE(is_subfamily(f, Family({{"A", a}})));
  CHECK_THROWS_AS(Family({}), InvalidArgument);
  CHECK_THROWS_AS(Family({{"A", a}, {"A", b}}), InvalidArgument);
  CHECK_THROWS_AS(Family({{"A", a}, {"B", single(H({"0.1"}), "y")}}), UniverseMismatch);
}

TEST_CASE("binding") {
  Binding b;
  CHECK(b.empty());
  CHECK_THROWS_AS(b.universe(), InvalidArgument);
  b.set("A", single(H({"0.1"})));
  b.set("A", single(H({"0.2"})));
  CHECK(b.sets().size() == 1);
  CHECK(b.set("A").at(0) == H({"0.2"}));
  CHECK(b.find_set("B") == nullptr);
  CHECK_THROWS_AS(b.set("B"), InvalidArgument);
  CHECK_THROWS_AS(b.family("F"), InvalidArgument);
  b.set("B", single(H({"0.2"}), "y"));
  CHECK_THROWS_AS(b.universe(), UniverseMismatch);
}

TEST_CASE("expressions") {
  Binding b;
  b.set("A", single(H({"0.8", "0.1"})));
  b.set("B", single(H({"0.9", "0.7"})));
  b.set_family("F", Family({{"A", b.set("A")}, {"B", b.set("B")}}));

  CHECK(Expr::parse("A∩B").eval(b).at(0) == H({"0.8", "0.7", "0.1"}));
  CHECK(Expr::parse("A & B").eval(b) == Expr::parse("A∩B").eval(b));
  CHECK(Expr::parse("(A|B)'").eval(b) == Expr::parse("Aᶜ∩Bᶜ").eval(b));
  CHECK(Expr::parse("~A").eval(b) == Expr::parse("A^c").eval(b));
  CHECK(Expr::parse("⋂F").eval(b) == Expr::parse("inter(F)").eval(b));
  CHECK(Expr::parse("⋃F").eval(b) == Expr::parse("A∪B").eval(b));

  // ∩ binds tighter than ∪.
  CHECK(Expr::parse("A | B & A").to_string() == "A∪(B∩A)");
  CHECK(Expr::parse("(A ∪ B) ∩ A").to_string() == "(A∪B)∩A");
  CHECK(Expr::parse("A∪B∪A").to_string() == "A∪B∪A");
  CHECK(Expr::parse("A∪(B∪A)").to_string() == "A∪(B∪A)");
  CHECK(Expr::parse("(A∪B)'").to_string() == "(A∪B)ᶜ");
  CHECK(Expr::parse("(⋃F)'").to_string() == "(⋃F)ᶜ");

  const Expr e = Expr::parse("(A∪B)∩⋂F∩A");
  CHECK(e.set_names() == std::vector<std::string>{"A", "B"});
  CHECK(e.family_names() == std::vector<std::string>{"F"});

  CHECK_THROWS_WITH_AS(Expr::parse("A ∪"), doctest::Contains("end of expression"), InvalidArgument);
  CHECK_THROWS_WITH_AS(Expr::parse("A # B"), doctest::Contains("column 3"), InvalidArgument);
  CHECK_THROWS_AS(Expr::parse("(A"), InvalidArgument);
  CHECK_THROWS_AS(Expr::parse("⋂(A)"), InvalidArgument);
  CHECK_THROWS_AS(Expr::parse("A B"), InvalidArgument);
  CHECK_THROWS_AS(Expr::parse("C").eval(b), InvalidArgument);
}
