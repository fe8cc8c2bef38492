#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "efcheck/rational.hpp"

using efcheck::BigInt;
using efcheck::Rational;

TEST_CASE("canonical form") {
  Rational r(6, 4);
  CHECK(r.numerator() == 3);
  CHECK(r.denominator() == 2);

  Rational neg(3, -6);
  CHECK(neg.numerator() == -1);
  CHECK(neg.denominator() == 2);

  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(2, 4) == Rational(1, 2));
}

TEST_CASE("arithmetic basics") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
  CHECK(-Rational(5, 7) == Rational(-5, 7));
  CHECK(Rational(7, 2).abs() == Rational(7, 2));
  CHECK(Rational(-7, 2).abs() == Rational(7, 2));
  CHECK(Rational(3, 5).reciprocal() == Rational(5, 3));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rational(0).reciprocal(), std::invalid_argument);
}

TEST_CASE("ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(5, 2).sign() == 1);
  CHECK(Rational(-5, 2).sign() == -1);
  CHECK(Rational(0).sign() == 0);
}

TEST_CASE("parse and print") {
  CHECK(Rational::parse("3") == Rational(3));
  CHECK(Rational::parse("3/1") == Rational(3));
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK(Rational::parse("+5/10") == Rational(1, 2));
  CHECK(Rational(3).str() == "3");
  CHECK(Rational(-3, 2).str() == "-3/2");
  CHECK(Rational(5, 10).str() == "1/2");

  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(" 1"), std::invalid_argument);
}

TEST_CASE("parse round trip on random values") {
  std::mt19937_64 eng(12345);
  for (int k = 0; k < 200; ++k) {
    long long num = static_cast<long long>(eng() % 20001) - 10000;
    long long den = static_cast<long long>(eng() % 999) + 1;
    Rational r(num, den);
    CHECK(Rational::parse(r.str()) == r);
    CHECK(r.denominator() > 0);
    CHECK(boost::multiprecision::gcd(boost::multiprecision::abs(r.numerator()), r.denominator()) == 1);
  }
}

TEST_CASE("field laws on random operands") {
  std::mt19937_64 eng(99);
  auto rnd = [&] {
    long long num = static_cast<long long>(eng() % 201) - 100;
    long long den = static_cast<long long>(eng() % 50) + 1;
    return Rational(num, den);
  };
  for (int k = 0; k < 500; ++k) {
    Rational a = rnd(), b = rnd(), c = rnd();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}
