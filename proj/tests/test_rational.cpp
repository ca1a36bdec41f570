#include <doctest.h>

#include <stdexcept>

#include "cakecut/rational.hpp"

using cakecut::Rational;

TEST_CASE("rationals print as p/q in lowest terms") {
  CHECK(Rational(0).str() == "0/1");
  CHECK(Rational(6, 8).str() == "3/4");
  CHECK(Rational(3, -9).str() == "-1/3");
  CHECK(Rational(5).str() == "5/1");
}

TEST_CASE("parsing accepts p/q and bare integers") {
  CHECK(Rational::parse("2/4") == Rational(1, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse("0/5").is_zero());
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("0.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/2x"), std::invalid_argument);
}

TEST_CASE("arithmetic and ordering stay exact") {
  const Rational third(1, 3);
  CHECK(third + third + third == Rational(1));
  CHECK(Rational(1, 10) * 3 == Rational(3, 10));
  CHECK(Rational(1) - Rational(1, 7) == Rational(6, 7));
  CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
  CHECK(Rational(1, 3) < Rational(34, 100));
  CHECK(cakecut::midpoint(Rational(7, 10), Rational(4, 5)) == Rational(3, 4));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("huge numerators survive round trips") {
  Rational x(1);
  for (int i = 0; i < 200; ++i) x *= Rational(3, 2);
  CHECK(Rational::parse(x.str()) == x);
  for (int i = 0; i < 200; ++i) x /= Rational(3, 2);
  CHECK(x == Rational(1));
}
