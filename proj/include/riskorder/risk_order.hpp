// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "riskorder/core.hpp"

namespace riskorder {

enum class Route { definition, pratt, transform, grid };

std::string to_string(Route route);

/// Counterexample to ordinal equivalence: u(x) >= u(y) but v(x) < v(y),
/// or u(x) > u(y) but v(x) <= v(y).
struct OrdinalViolation {
  std::string x, y;
  bool operator==(const OrdinalViolation&) const = default;
};

/// Counterexample to the compression-ratio condition on a triple with
/// u(x) < u(y) < u(z):
///   (u(z)-u(y))/(u(y)-u(x)) < (v(z)-v(y))/(v(y)-v(x)).
struct CompressionViolation {
  std::string x, y, z;
  bool operator==(const CompressionViolation&) const = default;
};

/// Counterexample lottery for reference alternative y.
/// weak part:   u(y) >= E_p[u] but v(y) <  E_p[v]
/// strict part: u(y) >  E_p[u] but v(y) <= E_p[v]
struct LotteryViolation {
  std::string y;
  Lottery p;
  Part part;
  bool operator==(const LotteryViolation&) const = default;
};

using LraWitness =
    std::variant<OrdinalViolation, CompressionViolation, LotteryViolation>;

struct RiskOrderVerdict {
  bool holds = false;
  std::optional<LraWitness> witness;  // present iff !holds
  Route route = Route::definition;

  bool operator==(const RiskOrderVerdict&) const = default;
};

/// An increasing convex piecewise-linear function given by its knots,
/// defined on the interval [first knot t, last knot t].
class PLTransform {
public:
  struct Knot {
    Rational t, value;
    bool operator==(const Knot&) const = default;
  };

  /// Knot t-coordinates and values must be strictly increasing and the
  /// chord slopes nondecreasing; otherwise InvariantError.
  explicit PLTransform(std::vector<Knot> knots);

  const std::vector<Knot>& knots() const { return knots_; }
  const Rational& domain_min() const { return knots_.front().t; }
  const Rational& domain_max() const { return knots_.back().t; }

private:
  std::vector<Knot> knots_;
};

/// Exact piecewise-linear interpolation; throws OutOfDomain when t lies
/// outside [domain_min, domain_max].
Rational apply_transform(const PLTransform& phi, const Rational& t);

/// Why no increasing convex transform carrying v to u exists.
struct TransformError {
  enum class Kind { not_well_defined, not_increasing, not_convex };
  Kind kind;
  // not_well_defined: v(x) = v(y) but u(x) != u(y)
  // not_increasing:   v(x) < v(y) but u(x) >= u(y)
  std::string x, y;
  // not_convex: labels of the three knots around the offending middle knot
  // and that knot's index.
  std::string z;
  std::size_t knot_index = 0;

  bool operator==(const TransformError&) const = default;
};

using TransformResult = std::variant<PLTransform, TransformError>;

/// Synthesizes the piecewise-linear transform whose knots pair the
/// distinct values of v with the corresponding values of u. Succeeds iff
/// u is less risk-averse than v; on success u(x) = phi(v(x)) exactly for
/// every x.
TransformResult build_transform(const UtilityTable& u, const UtilityTable& v);

/// Decides "u is less risk-averse than v" directly from the lottery
/// definition. The quantifier over all lotteries is eliminated exactly:
/// for each reference alternative y the worst case over the simplex
/// intersected with one half-space is attained at a support of size <= 2,
/// so singletons and two-point boundary lotteries are enumerated in a
/// fixed order and the first violation becomes the witness.
RiskOrderVerdict check_lra_definition(const UtilityTable& u, const UtilityTable& v);

/// Brute-force oracle: enumerates every lottery whose weights have
/// denominators dividing denom_bound. Intended for small instances only.
RiskOrderVerdict check_lra_grid(const UtilityTable& u, const UtilityTable& v,
                                unsigned denom_bound);

/// u(x) >= (>) u(y) implies v(x) >= (>) v(y) for all ordered pairs.
RiskOrderVerdict check_ordinal_equivalence(const UtilityTable& u,
                                           const UtilityTable& v);

/// The compression-ratio condition over all triples with u(x) < u(y) < u(z).
/// Standalone use can hit v(y) = v(x) on a qualifying triple, which throws
/// DegenerateDenominator (it signals an ordinal-equivalence failure).
RiskOrderVerdict check_compression(const UtilityTable& u, const UtilityTable& v);

/// Conjunction of ordinal equivalence and compression; equivalent to the
/// definition route, computed independently of it.
RiskOrderVerdict check_lra_pratt(const UtilityTable& u, const UtilityTable& v);

/// Third independent route: holds iff build_transform succeeds. On failure
/// the construction error is mapped to an ordinal or compression witness.
RiskOrderVerdict check_lra_transform(const UtilityTable& u, const UtilityTable& v);

/// Re-evaluates a witness's defining inequalities against the raw tables.
bool verify_witness(const UtilityTable& u, const UtilityTable& v,
                    const LraWitness& witness);

}  // namespace riskorder
