#include <doctest.h>

#include "ccs/core/bigint.hpp"
#include "ccs/core/rational.hpp"

using namespace ccs;

TEST_CASE("rational normalizes sign and common factors") {
  const Rational r(6, -4);
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(Rational(0, -7) == Rational(0));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational parse and print") {
  CHECK(Rational::parse("5") == Rational(5));
  CHECK(Rational::parse("-3/6") == Rational(-1, 2));
  CHECK(Rational::parse("+7/2").to_string() == "7/2");
  CHECK(Rational(-4, 2).to_string() == "-2");
  CHECK_THROWS(Rational::parse("1/"));
  CHECK_THROWS(Rational::parse("x"));
  CHECK_THROWS(Rational::parse("1/0"));
}

TEST_CASE("rational ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(2, 4) == Rational(1, 2));
}

TEST_CASE("binomial conventions") {
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(-2, -1) == 0);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(60, 30) == BigInt("118264581564861424"));
  CHECK(to_decimal(power(2, 100)) == "1267650600228229401496703205376");
}
