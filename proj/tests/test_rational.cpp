#include <doctest.h>

#include <random>

#include "ctx/error.hpp"
#include "ctx/rational.hpp"

using ctx::Rational;

TEST_CASE("rational literals parse into lowest terms") {
  CHECK(Rational::parse("2/4") == Rational(1, 2));
  CHECK(Rational::parse("2/4").to_string() == "1/2");
  CHECK(Rational::parse("0").to_string() == "0");
  CHECK(Rational::parse("1").to_string() == "1");
  CHECK(Rational::parse("-1/4") == Rational(-1, 4));
  CHECK(Rational::parse("0/7").to_string() == "0");
  CHECK(Rational::parse("123456789012345678901234567890/2").to_string() == "61728394506172839450617283945");
}

TEST_CASE("malformed rational literals are rejected") {
  for (const char* bad : {"", "1/", "/2", "1/0", "1.5", "abc", "+1", "1/-2", "--1", " 1", "1 /2", "0x10"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Rational::parse(bad), ctx::Error);
  }
}

TEST_CASE("rational arithmetic is exact") {
  const Rational third(1, 3);
  CHECK(third + third + third == Rational(1));
  CHECK(Rational(7, 10) * Rational(2) == Rational(7, 5));
  CHECK(Rational(3, 8) - Rational(1, 8) - Rational(1, 8) + Rational(3, 8) == Rational(1, 2));
  CHECK(Rational(1, 4) / Rational(1, 2) == Rational(1, 2));
  CHECK((-Rational(14, 5)).abs() == Rational(14, 5));
  CHECK(ctx::min(Rational(1, 4), Rational(1, 2)) == Rational(1, 4));
  CHECK(ctx::max(Rational(1, 4), Rational(1, 2)) == Rational(1, 2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), ctx::Error);
  CHECK_THROWS_AS(Rational(1, 0), ctx::Error);
}

TEST_CASE("formatting round-trips through parse") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 200; ++i) {
    const long num = static_cast<long>(rng() % 2001) - 1000;
    const long den = static_cast<long>(rng() % 999) + 1;
    const Rational r(num, den);
    const Rational back = Rational::parse(r.to_string());
    CHECK(back == r);
    CHECK(back.denominator() > 0);
    CHECK(gcd(back.numerator(), back.denominator()) == 1);
  }
}
