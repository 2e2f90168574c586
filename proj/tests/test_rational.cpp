#include "neflab/rational.hpp"

#include <doctest.h>

using namespace neflab;

TEST_SUITE("rational") {
  TEST_CASE("parse accepts integers, fractions and decimals") {
    CHECK(parse_rational("7") == 7);
    CHECK(parse_rational("-3") == -3);
    CHECK(parse_rational("14/6") == frac(7, 3));
    CHECK(parse_rational("-1/2") == frac(-1, 2));
    CHECK(parse_rational("1.25") == frac(5, 4));
    CHECK(parse_rational("-.5") == frac(-1, 2));
    CHECK(parse_rational(" 3 ") == 3);
    CHECK(parse_rational("010") == 10);
    CHECK(parse_rational("010/07") == frac(10, 7));
    CHECK(parse_rational("0.10") == frac(1, 10));
  }

  TEST_CASE("parse rejects inexact or malformed input") {
    for (const char* bad : {"", "abc", "1/0", "1e5", "sqrt(2)", "nan", "inf", "1/2/3", "--1", "."})
      CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
  }

  TEST_CASE("to_string is canonical") {
    CHECK(to_string(frac(18, 2)) == "9");
    CHECK(to_string(frac(-20, 12)) == "-5/3");
    CHECK(to_string(parse_rational("0.10")) == "1/10");
  }

  TEST_CASE("floor and ceil") {
    CHECK(floor(frac(7, 2)) == 3);
    CHECK(ceil(frac(7, 2)) == 4);
    CHECK(floor(frac(-7, 2)) == -4);
    CHECK(ceil(frac(-7, 2)) == -3);
    CHECK(floor(Rational(5)) == 5);
  }

  TEST_CASE("sqrt_ceil is the least k/den above the root") {
    const Integer den = 1000;
    for (long v : {0L, 1L, 2L, 3L, 9L, 11L, 1000L}) {
      const Rational r = sqrt_ceil(v, den);
      CHECK(r * r >= v);
      const Rational below = r - Rational(1) / Rational(den);
      CHECK((below < 0 || below * below < v));
    }
    CHECK(sqrt_ceil(9, 1) == 3);
    CHECK(sqrt_ceil(frac(1, 4), 2) == frac(1, 2));
  }
}
