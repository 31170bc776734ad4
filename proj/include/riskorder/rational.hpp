// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "riskorder/errors.hpp"

namespace riskorder {

using Int = boost::multiprecision::cpp_int;

/// Exact rational scalar, the only number type used on verdict paths.
/// Always stored in lowest terms with a positive denominator; every
/// operation is exact. Division by zero throws DivisionByZero.
class Rational {
public:
  Rational() = default;
  Rational(int n) : value_(n) {}
  Rational(long n) : value_(n) {}
  Rational(long long n) : value_(n) {}
  Rational(const Int& n) : value_(n) {}
  Rational(const Int& num, const Int& den);

  Int num() const { return numerator(value_); }
  Int den() const { return denominator(value_); }
  int sign() const { return value_.sign(); }
  bool is_zero() const { return value_.is_zero(); }
  bool is_integer() const { return denominator(value_) == 1; }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ == b.value_) return std::strong_ordering::equal;
    return std::strong_ordering::greater;
  }

  /// Accepts "p" and "p/q" with an optional leading minus on p; q must be
  /// a positive integer literal. Anything else is a ParseError.
  static Rational parse(std::string_view text);

  /// Renders "p" when the value is an integer, "p/q" otherwise;
  /// parse(str()) round-trips exactly.
  std::string str() const;

private:
  boost::multiprecision::cpp_rational value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace riskorder
