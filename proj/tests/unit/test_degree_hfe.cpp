#include "doctest.h"
#include "support.hpp"

#include "hfa/error.hpp"

using namespace hfa;
using test::D;
using test::H;
using test::R;

TEST_CASE("degree parsing is exact") {
  CHECK(D("0.45") == Degree::from_fraction(45, 100));
  CHECK(D("0.45").numerator() == 9);
  CHECK(D("0.45").denominator() == 20);
  CHECK(D(".5") == Degree::from_fraction(1, 2));
  CHECK(D("1") == Degree::one());
  CHECK(D("1.000") == Degree::one());
  CHECK(D("0") == Degree::zero());
  CHECK(D("0.567") == Degree::from_fraction(567, 1000));
  CHECK(D("0.123456789").denominator() == 1'000'000'000);
}

TEST_CASE("degree parsing rejects bad text") {
  for (const char* bad : {"1.5", "-0.1", "", "abc", "0.1.2", "0.1234567891", "1e-3", " 0.5", "0.5x", "."})
    CHECK_THROWS_AS(parse_degree(bad), DegreeError);
  CHECK_THROWS_AS(Degree::from_fraction(3, 2), DegreeError);
  CHECK_THROWS_AS(Degree::from_fraction(1, 0), DegreeError);
  CHECK_THROWS_AS(Degree::from_fraction(-1, 2), DegreeError);
}

TEST_CASE("exact parsing also takes fractions") {
  CHECK(parse_degree_exact("1/3") == Degree::from_fraction(2, 6));
  CHECK(parse_degree_exact("0.25") == Degree::from_fraction(1, 4));
  CHECK_THROWS_AS(parse_degree_exact("4/3"), DegreeError);
  CHECK_THROWS_AS(parse_degree_exact("1/0"), DegreeError);
  CHECK_THROWS_AS(parse_degree("1/3"), DegreeError);
}

TEST_CASE("degree rendering") {
  CHECK(D("0.45").to_string() == "0.45");
  CHECK(D("1.000").to_string() == "1");
  CHECK(Degree::zero().to_string() == "0");
  CHECK(Degree::from_fraction(1, 3).to_string() == "1/3");
  CHECK(D("0.45").complement() == D("0.55"));
  CHECK(D("0.45") < D("0.5"));
  CHECK(Degree::from_fraction(1, 3) > D("0.333333333"));
}

TEST_CASE("hfe is a canonical multiset") {
  const Hfe a = H({"0.3", "0.6", "0.5"});
  CHECK(a == H({"0.6", "0.5", "0.3"}));
  CHECK(a.to_string() == "{0.6, 0.5, 0.3}");
  CHECK(H({"0.3", "0.3", "0.6", "0.5"}) != a);
  CHECK(H({"0.5", "0.5"}).size() == 2);
  CHECK(H({"0.5", "0.5"}).is_constant());
  CHECK_FALSE(a.is_constant());
  CHECK_THROWS_AS(Hfe(std::vector<Degree>{}), InvalidArgument);
  CHECK_THROWS_AS(make_hfe({"0.2", "1.2"}), DegreeError);
}

TEST_CASE("bounds and means") {
  const auto [lo, hi] = bounds(H({"0.9", "0.2"}));
  CHECK(lo == D("0.2"));
  CHECK(hi == D("0.9"));
  CHECK(mean(H({"0.9", "0.2"})) == R(11, 20));
  CHECK(mean(H({"0.6", "0.6", "0.5"})) == R(17, 30));
  CHECK(to_fraction_string(mean(H({"0.6", "0.6", "0.5"}))) == "17/30");
  CHECK(to_decimal_string(mean(H({"0.6", "0.6", "0.5"})), 3) == "0.567");
  CHECK(to_decimal_string(R(1, 2)) == "0.5");
  CHECK(to_fraction_string(R(2, 1)) == "2");
  CHECK(H({"0.1", "0.2"}).sum() == R(3, 10));
  CHECK(compare_means(H({"0.9", "0.2"}), H({"0.6", "0.6", "0.5"})) < 0);
  CHECK(compare_means(H({"0.5"}), H({"0.4", "0.6"})) == 0);
  CHECK(compare_means(H({"1", "0"}), H({"0.5"})) == 0);
  // Mixed denominators far from a common grid stay exact.
  const Hfe odd({Degree::from_fraction(1, 3), Degree::from_fraction(2, 7), Degree::from_fraction(999'999'937, 1'000'000'000)});
  CHECK(mean(odd) == (R(1, 3) + R(2, 7) + R(999'999'937, 1'000'000'000)) / 3);
}

TEST_CASE("union keeps degrees at or above the larger lower bound") {
  // Multiplicity from both sides survives.
  CHECK(hfe_union(H({"0.9", "0.1"}), H({"0.8", "0.1"})) == H({"0.9", "0.8", "0.1", "0.1"}));
  CHECK(hfe_union(H({"0.3", "0.4"}), H({"0.8", "0.9"})) == H({"0.9", "0.8"}));
  CHECK(hfe_union(H({"0.5"}), H({"0.5"})) == H({"0.5", "0.5"}));
}

TEST_CASE("intersection keeps degrees at or below the smaller upper bound") {
  CHECK(hfe_intersection(H({"0.8", "0.1"}), H({"0.9", "0.7"})) == H({"0.8", "0.7", "0.1"}));
  CHECK(hfe_intersection(H({"0.1", "0.2", "0.3"}), H({"0.3", "0.4", "0.5"})) == H({"0.3", "0.3", "0.2", "0.1"}));
}

TEST_CASE("complement maps each degree to one minus it") {
  CHECK(hfe_complement(H({"0.4", "0.4"})) == H({"0.6", "0.6"}));
  CHECK(hfe_complement(H({"0.1", "0.1", "0.41"})) == H({"0.9", "0.9", "0.59"}));
  CHECK(hfe_complement(H({"0", "1"})) == H({"1", "0"}));
  const Hfe h = H({"0.25", "0.7", "0.7"});
  CHECK(hfe_complement(hfe_complement(h)) == h);
}
