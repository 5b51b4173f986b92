#include <doctest.h>

#include <random>

#include "hmoment/errors.hpp"
#include "hmoment/rational.hpp"

using namespace hmoment;

TEST_SUITE("rational") {
  TEST_CASE("parses fractions, integers and decimals exactly") {
    CHECK(parse_rational("1/4") == Rational(1, 4));
    CHECK(parse_rational("6/8") == Rational(3, 4));
    CHECK(parse_rational("-9/49") == Rational(-9, 49));
    CHECK(parse_rational("12") == Rational(12));
    CHECK(parse_rational(" 0.1 ") == Rational(1, 10));
    CHECK(parse_decimal("-1.25") == Rational(-5, 4));
    CHECK(parse_decimal("3e-2") == Rational(3, 100));
    CHECK(parse_decimal("2.5E3") == Rational(2500));
    CHECK(parse_decimal(".5") == Rational(1, 2));
  }

  TEST_CASE("rejects malformed input") {
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1/2/3"), ParseError);
    CHECK_THROWS_AS(parse_decimal("1.2.3"), ParseError);
    CHECK_THROWS_AS(parse_decimal("."), ParseError);
  }

  TEST_CASE("string form round-trips in lowest terms") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-100000, 100000);
    std::uniform_int_distribution<long> den(1, 100000);
    for (int i = 0; i < 200; ++i) {
      Rational q(num(rng), den(rng));
      q.canonicalize();
      const Rational back = parse_rational(to_string(q));
      CHECK(back == q);
      CHECK(back.get_den() > 0);
    }
    CHECK(to_string(Rational(4, 2)) == "2");
    CHECK(to_string(Rational(-3, 6)) == "-1/2");
  }

  TEST_CASE("pow and double conversion are exact") {
    CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(pow(Rational(5), 0) == Rational(1));
    CHECK(from_double(0.375) == Rational(3, 8));
    CHECK(from_double(-10.0) == Rational(-10));
  }
}
