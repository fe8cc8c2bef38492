#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>
#include <string_view>

namespace efcheck {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational scalar, always held in canonical form:
/// denominator > 0 and gcd(|numerator|, denominator) = 1. Equality and
/// ordering are exact; there is no floating-point anywhere.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : value_(n) {}  // NOLINT: implicit by design
  Rational(const BigInt& n) : value_(n) {}
  Rational(long long num, long long den);
  Rational(const BigInt& num, const BigInt& den);

  /// Parses "p/q" or "p" with optional leading '-'/'+'. Throws
  /// std::invalid_argument on anything else (including decimals).
  static Rational parse(std::string_view text);

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  bool is_zero() const { return value_.is_zero(); }
  int sign() const { return value_.sign(); }
  Rational abs() const;
  Rational reciprocal() const;

  /// "p/q", or just "p" when the denominator is 1.
  std::string str() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { Rational r; r.value_ = -a.value_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  boost::multiprecision::cpp_rational value_;
};

}  // namespace efcheck
