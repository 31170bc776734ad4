// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "riskorder/crossing.hpp"
#include "riskorder/param_table.hpp"
#include "riskorder/risk_order.hpp"
#include "riskorder/rng.hpp"

namespace riskorder {

/// Side (a): one risk-order verdict per comparable parameter pair.
struct PairLra {
  std::string theta, theta_prime;
  RiskOrderVerdict verdict;
};

struct SideA {
  bool holds = true;
  std::vector<PairLra> pairs;
};

/// Side (b): every pairwise difference U(y,.) - U(x,.) single-crossing,
/// plus signed-ratio monotonicity of the per-y difference families.
struct SideB {
  bool holds = true;
  CrossingVerdict sc;  // over the family of all ordered-pair differences
  std::vector<std::pair<std::string, CrossingVerdict>> srm;  // per y
};

struct PropositionReport {
  SideA side_a;
  CrossingVerdict side_b_sc;
  std::vector<std::pair<std::string, CrossingVerdict>> side_b_srm;
  bool agree = false;
  bool holds = false;
};

/// The family {U(y,.) - U(x,.) : x in alternatives}, member name = x.
/// The x = y member is the zero function.
FunctionFamily differences_family(const ParamUtilityTable& table,
                                  std::string_view y);

/// The family of all ordered-pair differences U(y,.) - U(x,.) with x != y,
/// member name "y-x", in (x outer, y inner) scan order.
FunctionFamily pairwise_differences_family(const ParamUtilityTable& table);

SideA check_prop_a(const ParamUtilityTable& table);
SideB check_prop_b(const ParamUtilityTable& table);

/// All independently computed truth values of the equivalence, kept
/// separate so disagreements can be detected (and injected by tests).
struct PropositionRoutes {
  SideA side_a_definition;  // lottery-definition route per pair
  bool pratt_all = true;    // ordinal+compression route, all pairs
  bool mixture_all = true;  // mixture single-crossing of difference families, all pairs
  SideB side_b;
  std::vector<std::string> pair_names;  // "theta <= theta'" per comparable pair
  std::vector<bool> definition_by_pair, pratt_by_pair, mixture_by_pair;
  /// Non-empty description of the first route disagreement, if any.
  std::string disagreement() const;
};
PropositionRoutes compute_proposition_routes(const ParamUtilityTable& table);

/// Computes both sides by every route and asserts their agreement. A
/// disagreement throws TheoremViolation carrying the serialized instance:
/// it is an implementation bug, never a property of the input.
PropositionReport check_proposition(const ParamUtilityTable& table);

struct InstanceGenParams {
  std::uint64_t seed = 0;
  int n_alternatives = 3;        // 2..6
  int n_params = 3;              // 2..5
  Rational relation_density{1, 2};  // in [0,1]
  std::int64_t max_abs_numerator = 8;
  std::int64_t max_denominator = 4;

  void validate() const;  // InvariantError outside the documented ranges
};

/// Deterministic in the seed: a random DAG at the requested density,
/// closed, with values uniform over bounded rationals.
ParamUtilityTable gen_random_instance(const InstanceGenParams& params);

/// A chain poset whose maximal slice is random and whose lower slices are
/// produced by composing random increasing convex piecewise-linear
/// transforms, so side (a) holds by construction. Requires
/// relation_density = 1 (UnsupportedPoset otherwise).
ParamUtilityTable gen_positive_instance(const InstanceGenParams& params);

/// Random increasing convex transform with the given knot coordinates
/// (strictly increasing, non-empty).
PLTransform gen_random_transform(Rng& rng, const std::vector<Rational>& knot_ts,
                                 std::int64_t max_abs_numerator,
                                 std::int64_t max_denominator);

/// Random utility table over `domain` with bounded values.
UtilityTable gen_random_table(Rng& rng, const Alternatives& domain,
                              std::int64_t max_abs_numerator,
                              std::int64_t max_denominator);

/// Sorted distinct values of a table (the transform knot coordinates).
std::vector<Rational> distinct_sorted_values(const UtilityTable& t);

}  // namespace riskorder
