#include <doctest.h>

#include "annlab/error.hpp"
#include "annlab/interval.hpp"
#include "annlab/rational.hpp"

using namespace annlab;

TEST_CASE("rational canonical text") {
  CHECK(Rational::parse("6/8").str() == "3/4");
  CHECK(Rational::parse("-4/2").str() == "-2");
  CHECK(Rational::parse("0/5").str() == "0");
  CHECK(Rational::parse("7").str() == "7");
  CHECK_THROWS_AS(Rational::parse("1/0"), DivisionByZero);
  CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
  CHECK_THROWS_AS(Rational::parse("0.5"), ParseError);
  CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
}

TEST_CASE("rational arithmetic") {
  Rational a(2, 3), b(-5, 4);
  CHECK((a + b).str() == "-7/12");
  CHECK((a * b).str() == "-5/6");
  CHECK((a / b).str() == "-8/15");
  CHECK(Rational(3, 2).pow(3).str() == "27/8");
  CHECK(Rational(3, 2).pow(-2).str() == "4/9");
  CHECK(Rational(0).pow(0) == Rational(1));
  CHECK_THROWS_AS(Rational(0).inverse(), DivisionByZero);
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(max(Rational(1, 3), Rational(-1)) == Rational(1, 3));
}

TEST_CASE("valuations") {
  CHECK(valuation(Rational(1, 4), BigInt(2)) == -2);
  CHECK(valuation(Rational(12), BigInt(2)) == 2);
  CHECK(valuation(Rational(27, 8), BigInt(3)) == 3);
  CHECK(valuation(Rational(5, 7), BigInt(2)) == 0);
}

TEST_CASE("intervals") {
  Interval I(Rational(0), Rational(1, 2), true, false);
  CHECK(I.contains(Rational(0)));
  CHECK_FALSE(I.contains(Rational(1, 2)));
  CHECK(I.str() == "[0,1/2)");
  CHECK(I.representative() == Rational(1, 4));
  CHECK_THROWS(Interval(Rational(1), Rational(0), true, true));
  CHECK_THROWS(Interval(Rational(1), Rational(1), true, false));
  auto J = intersect(I, Interval(Rational(1, 4), Rational(1), true, true));
  REQUIRE(J);
  CHECK(J->str() == "[1/4,1/2)");
  CHECK_FALSE(intersect(I, Interval(Rational(1, 2), Rational(1), true, true)));
}

TEST_CASE("partition from corner pairs") {
  auto P = partition_from_pairs(corner_pairs());
  REQUIRE(P.size() == 3);
  CHECK(P[0].str() == "[0,0]");
  CHECK(P[1].str() == "(0,1)");
  CHECK(P[2].str() == "[1,1]");
  CHECK(P.covers_unit_exactly());
  CHECK(P.locate(Rational(1, 3)) == 1);
  CHECK(P.locate(Rational(1)) == 2);
}

TEST_CASE("partition with inner points") {
  auto pairs = corner_pairs();
  pairs.push_back({Rational(1, 2), -1});
  pairs.push_back({Rational(1, 3), 1});
  std::sort(pairs.begin(), pairs.end());
  auto P = partition_from_pairs(pairs);
  REQUIRE(P.size() == 5);
  CHECK(P[1].str() == "(0,1/3]");
  CHECK(P[2].str() == "(1/3,1/2)");
  CHECK(P[3].str() == "[1/2,1)");
  CHECK(P.covers_unit_exactly());
  for (int k = 0; k <= 12; ++k) {
    Rational x(k, 12);
    CHECK(P[P.locate(x)].contains(x));
  }
}

TEST_CASE("partition rejects bad pairs") {
  auto pairs = corner_pairs();
  pairs.push_back({Rational(3, 2), -1});
  std::sort(pairs.begin(), pairs.end());
  CHECK_THROWS_AS(partition_from_pairs(pairs), ValidationError);
  auto p2 = corner_pairs();
  p2.erase(p2.begin());
  CHECK_THROWS_AS(partition_from_pairs(p2), ValidationError);
  auto p3 = corner_pairs();
  p3.push_back({Rational(1, 2), 0});
  std::sort(p3.begin(), p3.end());
  CHECK_THROWS_AS(partition_from_pairs(p3), ValidationError);
}
