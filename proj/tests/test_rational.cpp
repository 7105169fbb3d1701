#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qpbl/rational.hpp"

using qpbl::Rational;

TEST_CASE("construction normalizes sign and gcd") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(8, 7).num() == 8);
  CHECK(Rational(8, 7).den() == 7);
  CHECK_THROWS_AS(Rational(1, 0), qpbl::RationalOverflow);
}

TEST_CASE("parse accepts fractions, integers, and decimals") {
  CHECK(*Rational::parse("8/7") == Rational(8, 7));
  CHECK(*Rational::parse("-3/4") == Rational(-3, 4));
  CHECK(*Rational::parse("5") == Rational(5));
  CHECK(*Rational::parse("0.5") == Rational(1, 2));
  CHECK(*Rational::parse("1.25") == Rational(5, 4));
  CHECK(*Rational::parse("-0.1") == Rational(-1, 10));
  CHECK(!Rational::parse("").has_value());
  CHECK(!Rational::parse("1/0").has_value());
  CHECK(!Rational::parse("abc").has_value());
  CHECK(!Rational::parse("1.2.3").has_value());
}

TEST_CASE("from_double is exact on dyadics and round-trips") {
  CHECK(*Rational::from_double(0.5) == Rational(1, 2));
  CHECK(*Rational::from_double(3.0) == Rational(3));
  CHECK(*Rational::from_double(-0.75) == Rational(-3, 4));
  // 0.1 is not 1/10 as a double, but from_double must capture the exact
  // dyadic the double holds.
  const auto r = Rational::from_double(0.1);
  REQUIRE(r.has_value());
  CHECK(r->to_double() == 0.1);
  CHECK(!Rational::from_double(1e300).has_value());
  CHECK(!Rational::from_double(std::numeric_limits<double>::infinity()).has_value());
}

TEST_CASE("arithmetic identities over random values") {
  std::mt19937_64 rng(7);
  const auto draw = [&]() {
    const auto n = static_cast<std::int64_t>(rng() % 2001) - 1000;
    const auto d = static_cast<std::int64_t>(rng() % 999) + 1;
    return Rational(n, d);
  };
  for (int i = 0; i < 500; ++i) {
    const Rational a = draw(), b = draw(), c = draw();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rational(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("ordering is exact") {
  CHECK(Rational(8, 7) > Rational(1));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  // 8/7 differs from its double by less than any float comparison shows
  const Rational exact(8, 7);
  const Rational dyadic = *Rational::from_double(8.0 / 7.0);
  CHECK(exact != dyadic);
}

TEST_CASE("overflow is detected, not wrapped") {
  const Rational big(std::numeric_limits<std::int64_t>::max() / 2, 1);
  CHECK_THROWS_AS(big * big, qpbl::RationalOverflow);
  CHECK_THROWS_AS(Rational(1) / Rational(0), qpbl::RationalOverflow);
}

TEST_CASE("to_string renders fractions") {
  CHECK(Rational(8, 7).to_string() == "8/7");
  CHECK(Rational(5).to_string() == "5");
  CHECK(Rational(-1, 2).to_string() == "-1/2");
}
