// SPDX-License-Identifier: Apache-2.0
#include "riskorder/rational.hpp"

#include <cctype>
#include <ostream>

namespace riskorder {

Rational::Rational(const Int& num, const Int& den) {
  if (den.is_zero()) {
    throw DivisionByZero("rational with zero denominator");
  }
  // cpp_rational normalizes to lowest terms; fix the sign ourselves so we
  // never depend on the backend's convention for negative denominators.
  if (den < 0) {
    value_ = boost::multiprecision::cpp_rational(-num, -den);
  } else {
    value_ = boost::multiprecision::cpp_rational(num, den);
  }
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) {
    throw DivisionByZero("division by zero rational");
  }
  value_ /= o.value_;
  return *this;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view num_part = text;
  std::string_view den_part;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num_part = text.substr(0, slash);
    den_part = text.substr(slash + 1);
    if (den_part.find('/') != std::string_view::npos) {
      throw ParseError("malformed rational \"" + std::string(text) + "\"");
    }
  }
  std::string_view digits = num_part;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (!all_digits(digits)) {
    throw ParseError("malformed rational \"" + std::string(text) + "\"");
  }
  Int num{std::string(num_part)};
  if (den_part.data() == nullptr) {
    return Rational(num);
  }
  if (!all_digits(den_part)) {
    throw ParseError("malformed rational \"" + std::string(text) + "\"");
  }
  Int den{std::string(den_part)};
  if (den.is_zero()) {
    throw ParseError("zero denominator in rational \"" + std::string(text) + "\"");
  }
  return Rational(num, den);
}

std::string Rational::str() const {
  std::string out = num().str();
  if (!is_integer()) {
    out += '/';
    out += den().str();
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace riskorder
