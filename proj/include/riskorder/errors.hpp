// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace riskorder {

/// Base class of every error this library raises on purpose.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Exact arithmetic has no sentinel values: dividing by zero throws.
class DivisionByZero : public Error {
public:
  using Error::Error;
};

/// Malformed input text. The message carries the field path (e.g. "u.b")
/// or the byte position reported by the JSON parser.
class ParseError : public Error {
public:
  using Error::Error;
};

/// Structurally valid input that violates a documented invariant
/// (lottery weights not summing to one, duplicate labels, ...).
class InvariantError : public Error {
public:
  using Error::Error;
};

/// Two objects that must share an alternative set (or parameter poset)
/// do not.
class DomainMismatch : public Error {
public:
  using Error::Error;
};

/// The declared relation would make two distinct elements mutually
/// comparable, breaking antisymmetry.
class CycleError : public Error {
public:
  using Error::Error;
};

/// Evaluation point outside a transform's domain interval.
class OutOfDomain : public Error {
public:
  using Error::Error;
};

class UnknownAlternative : public Error {
public:
  using Error::Error;
};

/// check_compression was invoked standalone on a pair whose v-values tie
/// on a qualifying triple; the ratio condition is undefined there.
class DegenerateDenominator : public Error {
public:
  using Error::Error;
};

/// srm_ratio_form requires every family member to be single-crossing.
class NotSingleCrossing : public Error {
public:
  using Error::Error;
};

/// The constructive instance generator only supports chain posets.
class UnsupportedPoset : public Error {
public:
  using Error::Error;
};

/// Two independently computed routes that are provably equivalent
/// disagreed. This is always a bug in this library, never a property of
/// the input; the offending instance is attached for reproduction.
class TheoremViolation : public Error {
public:
  TheoremViolation(const std::string& what, std::string instance_json)
      : Error(what), instance_json_(std::move(instance_json)) {}

  const std::string& instance_json() const { return instance_json_; }

private:
  std::string instance_json_;
};

}  // namespace riskorder
