#include "efcheck/rational.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace efcheck {

Rational::Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den.is_zero()) throw std::invalid_argument("Rational: zero denominator");
  value_ = boost::multiprecision::cpp_rational(num);
  value_ /= boost::multiprecision::cpp_rational(den);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::invalid_argument("Rational: reciprocal of zero");
  return Rational(denominator(), numerator());
}

Rational Rational::parse(std::string_view text) {
  auto fail = [&] {
    throw std::invalid_argument("Rational: cannot parse \"" + std::string(text) + "\"");
  };
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  auto read_digits = [&]() -> BigInt {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail();
    return BigInt(std::string(text.substr(start, pos - start)));
  };
  BigInt num = read_digits();
  BigInt den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = read_digits();
    if (den.is_zero()) fail();
  }
  if (pos != text.size()) fail();
  if (negative) num = -num;
  return Rational(num, den);
}

std::string Rational::str() const {
  std::ostringstream os;
  os << numerator();
  if (denominator() != 1) os << '/' << denominator();
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace efcheck
