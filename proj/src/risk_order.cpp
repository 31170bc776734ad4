// SPDX-License-Identifier: Apache-2.0
#include "riskorder/risk_order.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "riskorder/errors.hpp"

namespace riskorder {

std::string to_string(Route route) {
  switch (route) {
    case Route::definition: return "definition";
    case Route::pratt: return "pratt";
    case Route::transform: return "transform";
    case Route::grid: return "grid";
  }
  return "?";
}

namespace {

void require_shared_domain(const UtilityTable& u, const UtilityTable& v) {
  if (!(u.domain() == v.domain())) {
    throw DomainMismatch("the two utility tables have different alternative sets");
  }
}

RiskOrderVerdict pass(Route route) { return {true, std::nullopt, route}; }

RiskOrderVerdict fail(LraWitness witness, Route route) {
  return {false, std::move(witness), route};
}

}  // namespace

PLTransform::PLTransform(std::vector<Knot> knots) : knots_(std::move(knots)) {
  if (knots_.empty()) {
    throw InvariantError("transform needs at least one knot");
  }
  for (std::size_t i = 0; i + 1 < knots_.size(); ++i) {
    if (!(knots_[i].t < knots_[i + 1].t)) {
      throw InvariantError("transform knot coordinates must strictly increase");
    }
    if (!(knots_[i].value < knots_[i + 1].value)) {
      throw InvariantError("transform knot values must strictly increase");
    }
  }
  for (std::size_t i = 0; i + 2 < knots_.size(); ++i) {
    const Rational left =
        (knots_[i + 1].value - knots_[i].value) / (knots_[i + 1].t - knots_[i].t);
    const Rational right = (knots_[i + 2].value - knots_[i + 1].value) /
                           (knots_[i + 2].t - knots_[i + 1].t);
    if (left > right) {
      throw InvariantError("transform chord slopes must be nondecreasing");
    }
  }
}

Rational apply_transform(const PLTransform& phi, const Rational& t) {
  const auto& knots = phi.knots();
  if (t < phi.domain_min() || t > phi.domain_max()) {
    throw OutOfDomain("evaluation point " + t.str() + " outside [" +
                      phi.domain_min().str() + ", " + phi.domain_max().str() + "]");
  }
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    if (t <= knots[i + 1].t) {
      const Rational slope =
          (knots[i + 1].value - knots[i].value) / (knots[i + 1].t - knots[i].t);
      return knots[i].value + (t - knots[i].t) * slope;
    }
  }
  return knots.back().value;  // single knot, or t == domain_max
}

TransformResult build_transform(const UtilityTable& u, const UtilityTable& v) {
  require_shared_domain(u, v);
  const std::size_t n = u.size();
  const auto& labels = u.domain().labels();

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (v[i] == v[j] && u[i] != u[j]) {
        return TransformError{TransformError::Kind::not_well_defined,
                              labels[i], labels[j], "", 0};
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (v[i] < v[j] && u[i] >= u[j]) {
        return TransformError{TransformError::Kind::not_increasing,
                              labels[i], labels[j], "", 0};
      }
      if (v[j] < v[i] && u[j] >= u[i]) {
        return TransformError{TransformError::Kind::not_increasing,
                              labels[j], labels[i], "", 0};
      }
    }
  }

  // One knot per distinct v-value; the representative alternative is the
  // first one in domain order attaining it.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<PLTransform::Knot> knots;
  std::vector<std::size_t> reps;
  for (std::size_t idx : order) {
    if (knots.empty() || knots.back().t != v[idx]) {
      knots.push_back({v[idx], u[idx]});
      reps.push_back(idx);
    }
  }

  for (std::size_t k = 0; k + 2 < knots.size(); ++k) {
    const Rational left =
        (knots[k + 1].value - knots[k].value) / (knots[k + 1].t - knots[k].t);
    const Rational right =
        (knots[k + 2].value - knots[k + 1].value) / (knots[k + 2].t - knots[k + 1].t);
    if (left > right) {
      return TransformError{TransformError::Kind::not_convex, labels[reps[k]],
                            labels[reps[k + 1]], labels[reps[k + 2]], k + 1};
    }
  }
  return PLTransform(std::move(knots));
}

RiskOrderVerdict check_lra_definition(const UtilityTable& u, const UtilityTable& v) {
  require_shared_domain(u, v);
  const std::size_t n = u.size();
  const auto& dom = u.domain();

  for (std::size_t y = 0; y < n; ++y) {
    // Weak part: is there p with E_p[u] <= u(y) and E_p[v] > v(y)?
    // The maximum of E_p[v] over that closed region is attained at a
    // vertex: a feasible point mass, or the boundary point of a support
    // pair whose u-values strictly straddle u(y).
    for (std::size_t x = 0; x < n; ++x) {
      if (u[x] <= u[y] && v[x] > v[y]) {
        return fail(LotteryViolation{dom.label(y), Lottery::point_mass(dom, x),
                                     Part::weak},
                    Route::definition);
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const bool straddles = (u[i] < u[y] && u[j] > u[y]) ||
                               (u[i] > u[y] && u[j] < u[y]);
        if (!straddles) continue;
        const Rational alpha = (u[y] - u[j]) / (u[i] - u[j]);  // E_p[u] = u(y)
        const Rational ev = alpha * v[i] + (Rational(1) - alpha) * v[j];
        if (ev > v[y]) {
          return fail(LotteryViolation{dom.label(y),
                                       Lottery::two_point(dom, i, j, alpha),
                                       Part::weak},
                      Route::definition);
        }
      }
    }
    // Strict part, dualized to a closed program: is there p with
    // E_p[v] >= v(y) and E_p[u] < u(y)? The minimum of E_p[u] over that
    // region is again attained at a support of size <= 2.
    for (std::size_t x = 0; x < n; ++x) {
      if (v[x] >= v[y] && u[x] < u[y]) {
        return fail(LotteryViolation{dom.label(y), Lottery::point_mass(dom, x),
                                     Part::strict},
                    Route::definition);
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const bool straddles = (v[i] < v[y] && v[j] > v[y]) ||
                               (v[i] > v[y] && v[j] < v[y]);
        if (!straddles) continue;
        const Rational beta = (v[y] - v[j]) / (v[i] - v[j]);  // E_p[v] = v(y)
        const Rational eu = beta * u[i] + (Rational(1) - beta) * u[j];
        if (eu < u[y]) {
          return fail(LotteryViolation{dom.label(y),
                                       Lottery::two_point(dom, i, j, beta),
                                       Part::strict},
                      Route::definition);
        }
      }
    }
  }
  return pass(Route::definition);
}

namespace {

/// Visits every way of writing `total` as an ordered sum of `parts`
/// nonnegative integers, first coordinate descending. Returns false if a
/// visitor stopped the walk.
bool for_each_composition(unsigned total, std::size_t parts,
                          std::vector<unsigned>& counts, std::size_t pos,
                          const std::function<bool(const std::vector<unsigned>&)>& visit) {
  if (pos + 1 == parts) {
    counts[pos] = total;
    return visit(counts);
  }
  for (unsigned k = total + 1; k-- > 0;) {
    counts[pos] = k;
    if (!for_each_composition(total - k, parts, counts, pos + 1, visit)) {
      return false;
    }
  }
  return true;
}

}  // namespace

RiskOrderVerdict check_lra_grid(const UtilityTable& u, const UtilityTable& v,
                                unsigned denom_bound) {
  require_shared_domain(u, v);
  if (denom_bound < 1) {
    throw InvariantError("grid denominator bound must be >= 1");
  }
  const std::size_t n = u.size();
  const auto& dom = u.domain();
  const Rational d(static_cast<long long>(denom_bound));

  RiskOrderVerdict verdict = pass(Route::grid);
  std::vector<unsigned> counts(n, 0);
  for (std::size_t y = 0; y < n && verdict.holds; ++y) {
    for_each_composition(
        denom_bound, n, counts, 0, [&](const std::vector<unsigned>& c) {
          Rational eu, ev;
          for (std::size_t i = 0; i < n; ++i) {
            if (c[i] == 0) continue;
            const Rational w{Int(c[i]), Int(denom_bound)};
            eu += u[i] * w;
            ev += v[i] * w;
          }
          std::optional<Part> part;
          if (u[y] > eu && v[y] <= ev) {
            part = Part::strict;
          } else if (u[y] >= eu && v[y] < ev) {
            part = Part::weak;
          }
          if (part) {
            std::vector<Rational> weights;
            weights.reserve(n);
            for (unsigned k : c) weights.emplace_back(Int(k), Int(denom_bound));
            verdict = fail(LotteryViolation{dom.label(y),
                                            Lottery(dom, std::move(weights)), *part},
                           Route::grid);
            return false;
          }
          return true;
        });
  }
  return verdict;
}

RiskOrderVerdict check_ordinal_equivalence(const UtilityTable& u,
                                           const UtilityTable& v) {
  require_shared_domain(u, v);
  const std::size_t n = u.size();
  const auto& labels = u.domain().labels();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      if ((u[x] >= u[y] && v[x] < v[y]) || (u[x] > u[y] && v[x] <= v[y])) {
        return fail(OrdinalViolation{labels[x], labels[y]}, Route::pratt);
      }
    }
  }
  return pass(Route::pratt);
}

RiskOrderVerdict check_compression(const UtilityTable& u, const UtilityTable& v) {
  require_shared_domain(u, v);
  const std::size_t n = u.size();
  const auto& labels = u.domain().labels();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (x == y || y == z || x == z) continue;
        if (!(u[x] < u[y] && u[y] < u[z])) continue;
        if (v[y] == v[x]) {
          throw DegenerateDenominator(
              "v(" + labels[x] + ") = v(" + labels[y] +
              ") on a triple with u(" + labels[x] + ") < u(" + labels[y] + ")");
        }
        const Rational lhs = (u[z] - u[y]) / (u[y] - u[x]);
        const Rational rhs = (v[z] - v[y]) / (v[y] - v[x]);
        if (lhs < rhs) {
          return fail(CompressionViolation{labels[x], labels[y], labels[z]},
                      Route::pratt);
        }
      }
    }
  }
  return pass(Route::pratt);
}

RiskOrderVerdict check_lra_pratt(const UtilityTable& u, const UtilityTable& v) {
  RiskOrderVerdict ordinal = check_ordinal_equivalence(u, v);
  if (!ordinal.holds) return ordinal;
  // Ordinal equivalence makes v strictly increase wherever u does, so the
  // ratio denominators below are nonzero.
  return check_compression(u, v);
}

RiskOrderVerdict check_lra_transform(const UtilityTable& u, const UtilityTable& v) {
  TransformResult result = build_transform(u, v);
  if (std::holds_alternative<PLTransform>(result)) {
    return pass(Route::transform);
  }
  const auto& e = std::get<TransformError>(result);
  switch (e.kind) {
    case TransformError::Kind::not_well_defined:
      // v ties but u does not: whichever side has the larger u-value makes
      // the ordinal strict implication fail.
      if (u.at(e.x) > u.at(e.y)) {
        return fail(OrdinalViolation{e.x, e.y}, Route::transform);
      }
      return fail(OrdinalViolation{e.y, e.x}, Route::transform);
    case TransformError::Kind::not_increasing:
      return fail(OrdinalViolation{e.x, e.y}, Route::transform);
    case TransformError::Kind::not_convex:
      return fail(CompressionViolation{e.x, e.y, e.z}, Route::transform);
  }
  throw Error("unreachable transform error kind");
}

namespace {

struct WitnessVerifier {
  const UtilityTable& u;
  const UtilityTable& v;

  bool operator()(const OrdinalViolation& w) const {
    const Rational &ux = u.at(w.x), &uy = u.at(w.y);
    const Rational &vx = v.at(w.x), &vy = v.at(w.y);
    return (ux >= uy && vx < vy) || (ux > uy && vx <= vy);
  }

  bool operator()(const CompressionViolation& w) const {
    const Rational &ux = u.at(w.x), &uy = u.at(w.y), &uz = u.at(w.z);
    const Rational &vx = v.at(w.x), &vy = v.at(w.y), &vz = v.at(w.z);
    if (!(ux < uy && uy < uz) || vy == vx) return false;
    return (uz - uy) / (uy - ux) < (vz - vy) / (vy - vx);
  }

  bool operator()(const LotteryViolation& w) const {
    if (!(w.p.domain() == u.domain())) return false;
    const Rational eu = expected_value(u, w.p);
    const Rational ev = expected_value(v, w.p);
    const Rational &uy = u.at(w.y), &vy = v.at(w.y);
    if (w.part == Part::weak) return uy >= eu && vy < ev;
    return uy > eu && vy <= ev;
  }
};

}  // namespace

bool verify_witness(const UtilityTable& u, const UtilityTable& v,
                    const LraWitness& witness) {
  require_shared_domain(u, v);
  return std::visit(WitnessVerifier{u, v}, witness);
}

}  // namespace riskorder
