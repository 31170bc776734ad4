// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "riskorder/param_table.hpp"

namespace riskorder {

/// A named, ordered family of functions on one shared parameter poset.
class FunctionFamily {
public:
  FunctionFamily(Poset params,
                 std::vector<std::pair<std::string, ParamFunction>> members);

  const Poset& params() const { return params_; }
  std::size_t size() const { return members_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const ParamFunction& member(std::size_t i) const { return members_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::size_t index_of(std::string_view name) const;

private:
  Poset params_;
  std::vector<std::string> names_;
  std::vector<ParamFunction> members_;
};

/// Single-crossing fails for `member` at theta <= theta':
/// weak part:   f(theta) >= 0 but f(theta') <  0
/// strict part: f(theta) >  0 but f(theta') <= 0
struct ScViolation {
  std::string member;  // empty when checking a bare function
  std::string theta, theta_prime;
  Part part;
  bool operator==(const ScViolation&) const = default;
};

/// Signed-ratio monotonicity fails: phi(theta) < 0 < psi(theta) but
/// -phi(theta)*psi(theta') < -phi(theta')*psi(theta).
struct SrmViolation {
  std::string phi, psi;
  std::string theta, theta_prime;
  bool operator==(const SrmViolation&) const = default;
};

/// A convex combination of members (support <= 2) that is not
/// single-crossing at theta <= theta'.
struct MixtureViolation {
  std::vector<std::pair<std::string, Rational>> weights;  // support only
  std::string theta, theta_prime;
  Part part;
  bool operator==(const MixtureViolation&) const = default;
};

using CrossingWitness = std::variant<ScViolation, SrmViolation, MixtureViolation>;

struct CrossingVerdict {
  bool holds = false;
  std::optional<CrossingWitness> witness;

  bool operator==(const CrossingVerdict&) const = default;
};

/// f(theta) >= (>) 0 implies f(theta') >= (>) 0 over every comparable pair
/// of distinct parameters.
CrossingVerdict check_single_crossing(const ParamFunction& fn);

/// Every member is single-crossing; first violation reported.
CrossingVerdict check_family_sc(const FunctionFamily& family);

/// Signed-ratio monotonicity over all ordered member pairs (the sign
/// hypothesis is asymmetric, so both orderings of each pair are tested).
CrossingVerdict check_srm(const FunctionFamily& family);

/// Every convex combination of members is single-crossing. Decided
/// exactly per comparable pair by the same support-<=2 vertex enumeration
/// as the risk-order definition route, over the member-weight simplex.
CrossingVerdict check_mixture_sc(const FunctionFamily& family);

/// Brute-force oracle over mixture weights with denominators dividing
/// denom_bound. Small instances only.
CrossingVerdict check_mixture_sc_grid(const FunctionFamily& family,
                                      unsigned denom_bound);

/// The ratio reformulation -phi(theta)/psi(theta) >= -phi(theta')/psi(theta'),
/// well defined once every member is single-crossing (NotSingleCrossing
/// otherwise). Agrees with check_srm on such families.
CrossingVerdict srm_ratio_form(const FunctionFamily& family);

/// Re-evaluates a witness's defining inequalities against the family.
bool verify_witness(const FunctionFamily& family, const CrossingWitness& witness);

}  // namespace riskorder
