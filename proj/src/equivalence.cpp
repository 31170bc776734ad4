// SPDX-License-Identifier: Apache-2.0
#include "riskorder/equivalence.hpp"

#include <algorithm>
#include <numeric>

#include "riskorder/errors.hpp"
#include "riskorder/instances.hpp"

namespace riskorder {

FunctionFamily differences_family(const ParamUtilityTable& table,
                                  std::string_view y) {
  const std::size_t yi = table.alternatives().index_of(y);
  const std::size_t nt = table.params().size();
  std::vector<std::pair<std::string, ParamFunction>> members;
  members.reserve(table.alternatives().size());
  for (std::size_t x = 0; x < table.alternatives().size(); ++x) {
    std::vector<Rational> values(nt);
    for (std::size_t t = 0; t < nt; ++t) {
      values[t] = table.value(yi, t) - table.value(x, t);
    }
    members.emplace_back(table.alternatives().label(x),
                         ParamFunction(table.params(), std::move(values)));
  }
  return FunctionFamily(table.params(), std::move(members));
}

SideA check_prop_a(const ParamUtilityTable& table) {
  SideA side;
  for (const auto& [a, b] : table.params().strict_pairs()) {
    RiskOrderVerdict verdict = check_lra_definition(table.slice(a), table.slice(b));
    side.holds = side.holds && verdict.holds;
    side.pairs.push_back(
        {table.params().element(a), table.params().element(b), std::move(verdict)});
  }
  return side;
}

FunctionFamily pairwise_differences_family(const ParamUtilityTable& table) {
  const std::size_t n = table.alternatives().size();
  const std::size_t nt = table.params().size();
  std::vector<std::pair<std::string, ParamFunction>> members;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      std::vector<Rational> values(nt);
      for (std::size_t t = 0; t < nt; ++t) {
        values[t] = table.value(y, t) - table.value(x, t);
      }
      members.emplace_back(
          table.alternatives().label(y) + "-" + table.alternatives().label(x),
          ParamFunction(table.params(), std::move(values)));
    }
  }
  return FunctionFamily(table.params(), std::move(members));
}

SideB check_prop_b(const ParamUtilityTable& table) {
  SideB side;
  side.sc = check_family_sc(pairwise_differences_family(table));
  side.holds = side.sc.holds;
  for (std::size_t y = 0; y < table.alternatives().size(); ++y) {
    CrossingVerdict verdict =
        check_srm(differences_family(table, table.alternatives().label(y)));
    side.holds = side.holds && verdict.holds;
    side.srm.emplace_back(table.alternatives().label(y), std::move(verdict));
  }
  return side;
}

namespace {

/// The y-differences family restricted to the two-element chain
/// {theta <= theta'}, for the per-pair mixture route.
FunctionFamily restricted_differences(const ParamUtilityTable& table,
                                      std::size_t y, std::size_t a, std::size_t b) {
  Poset chain({table.params().element(a), table.params().element(b)},
              {{table.params().element(a), table.params().element(b)}});
  std::vector<std::pair<std::string, ParamFunction>> members;
  for (std::size_t x = 0; x < table.alternatives().size(); ++x) {
    std::vector<Rational> values = {table.value(y, a) - table.value(x, a),
                                    table.value(y, b) - table.value(x, b)};
    members.emplace_back(table.alternatives().label(x),
                         ParamFunction(chain, std::move(values)));
  }
  return FunctionFamily(std::move(chain), std::move(members));
}

}  // namespace

std::string PropositionRoutes::disagreement() const {
  for (std::size_t i = 0; i < pair_names.size(); ++i) {
    if (definition_by_pair[i] != pratt_by_pair[i] ||
        definition_by_pair[i] != mixture_by_pair[i]) {
      return "route disagreement at pair (" + pair_names[i] +
             "): definition=" + (definition_by_pair[i] ? "true" : "false") +
             " pratt=" + (pratt_by_pair[i] ? "true" : "false") +
             " mixture=" + (mixture_by_pair[i] ? "true" : "false");
    }
  }
  const bool a = side_a_definition.holds;
  if (a != pratt_all || a != mixture_all || a != side_b.holds) {
    return std::string("side disagreement: definition=") + (a ? "true" : "false") +
           " pratt=" + (pratt_all ? "true" : "false") +
           " mixture=" + (mixture_all ? "true" : "false") +
           " side_b=" + (side_b.holds ? "true" : "false");
  }
  return "";
}

PropositionRoutes compute_proposition_routes(const ParamUtilityTable& table) {
  PropositionRoutes routes;
  routes.side_a_definition = check_prop_a(table);
  for (const auto& [a, b] : table.params().strict_pairs()) {
    const UtilityTable u = table.slice(a);
    const UtilityTable v = table.slice(b);
    const bool pratt = check_lra_pratt(u, v).holds;
    bool mixture = true;
    for (std::size_t y = 0; y < table.alternatives().size() && mixture; ++y) {
      mixture = check_mixture_sc(restricted_differences(table, y, a, b)).holds;
    }
    routes.pair_names.push_back(table.params().element(a) + " <= " +
                                table.params().element(b));
    routes.pratt_by_pair.push_back(pratt);
    routes.mixture_by_pair.push_back(mixture);
    routes.pratt_all = routes.pratt_all && pratt;
    routes.mixture_all = routes.mixture_all && mixture;
  }
  for (const auto& pair : routes.side_a_definition.pairs) {
    routes.definition_by_pair.push_back(pair.verdict.holds);
  }
  routes.side_b = check_prop_b(table);
  return routes;
}

PropositionReport check_proposition(const ParamUtilityTable& table) {
  PropositionRoutes routes = compute_proposition_routes(table);
  if (std::string why = routes.disagreement(); !why.empty()) {
    throw TheoremViolation(why, to_json(ParamInstance{table}).dump(2));
  }
  PropositionReport report;
  report.side_a = std::move(routes.side_a_definition);
  report.side_b_sc = std::move(routes.side_b.sc);
  report.side_b_srm = std::move(routes.side_b.srm);
  report.holds = report.side_a.holds;
  report.agree = true;
  return report;
}

void InstanceGenParams::validate() const {
  if (n_alternatives < 2 || n_alternatives > 6) {
    throw InvariantError("n_alternatives must be in 2..6");
  }
  if (n_params < 2 || n_params > 5) {
    throw InvariantError("n_params must be in 2..5");
  }
  if (relation_density.sign() < 0 || relation_density > Rational(1)) {
    throw InvariantError("relation_density must lie in [0,1]");
  }
  if (max_abs_numerator < 1) {
    throw InvariantError("max_abs_numerator must be positive");
  }
  if (max_denominator < 1) {
    throw InvariantError("max_denominator must be positive");
  }
}

namespace {

std::vector<std::string> numbered_labels(const char* prefix, int n) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    out.push_back(prefix + std::to_string(i));
  }
  return out;
}

}  // namespace

ParamUtilityTable gen_random_instance(const InstanceGenParams& params) {
  params.validate();
  Rng rng(params.seed);

  auto alt_labels = numbered_labels("x", params.n_alternatives);
  auto param_labels = numbered_labels("t", params.n_params);

  // Random DAG: edges point forward along a sampled topological order.
  std::vector<std::size_t> order(param_labels.size());
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  std::vector<std::pair<std::string, std::string>> declared;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      if (rng.chance(params.relation_density)) {
        declared.emplace_back(param_labels[order[i]], param_labels[order[j]]);
      }
    }
  }
  Poset poset(param_labels, std::move(declared));

  Alternatives domain(alt_labels);
  std::vector<Rational> values(domain.size() * poset.size());
  for (auto& value : values) {
    value = rng.rational(params.max_abs_numerator, params.max_denominator);
  }
  return ParamUtilityTable(std::move(domain), std::move(poset), std::move(values));
}

UtilityTable gen_random_table(Rng& rng, const Alternatives& domain,
                              std::int64_t max_abs_numerator,
                              std::int64_t max_denominator) {
  std::vector<Rational> values(domain.size());
  for (auto& value : values) {
    value = rng.rational(max_abs_numerator, max_denominator);
  }
  return UtilityTable(domain, std::move(values));
}

std::vector<Rational> distinct_sorted_values(const UtilityTable& t) {
  std::vector<Rational> values = t.values();
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

PLTransform gen_random_transform(Rng& rng, const std::vector<Rational>& knot_ts,
                                 std::int64_t max_abs_numerator,
                                 std::int64_t max_denominator) {
  if (knot_ts.empty()) {
    throw InvariantError("transform needs at least one knot coordinate");
  }
  std::vector<Rational> slopes;
  slopes.reserve(knot_ts.size() - 1);
  for (std::size_t i = 0; i + 1 < knot_ts.size(); ++i) {
    slopes.emplace_back(Int(rng.range(1, max_abs_numerator)),
                        Int(rng.range(1, max_denominator)));
  }
  std::sort(slopes.begin(), slopes.end());  // nondecreasing slopes = convex

  std::vector<PLTransform::Knot> knots;
  knots.reserve(knot_ts.size());
  Rational value = rng.rational(max_abs_numerator, max_denominator);
  knots.push_back({knot_ts.front(), value});
  for (std::size_t i = 1; i < knot_ts.size(); ++i) {
    value += slopes[i - 1] * (knot_ts[i] - knot_ts[i - 1]);
    knots.push_back({knot_ts[i], value});
  }
  return PLTransform(std::move(knots));
}

ParamUtilityTable gen_positive_instance(const InstanceGenParams& params) {
  params.validate();
  if (params.relation_density != Rational(1)) {
    throw UnsupportedPoset(
        "the constructive generator supports chain posets only "
        "(relation_density must be 1)");
  }
  Rng rng(params.seed);

  auto param_labels = numbered_labels("t", params.n_params);
  std::vector<std::pair<std::string, std::string>> declared;
  for (std::size_t i = 0; i + 1 < param_labels.size(); ++i) {
    declared.emplace_back(param_labels[i], param_labels[i + 1]);
  }
  Poset chain(param_labels, std::move(declared));

  Alternatives domain(numbered_labels("x", params.n_alternatives));
  const std::size_t nt = chain.size();
  std::vector<Rational> values(domain.size() * nt);
  auto set_slice = [&](std::size_t t, const UtilityTable& slice) {
    for (std::size_t x = 0; x < domain.size(); ++x) {
      values[x * nt + t] = slice[x];
    }
  };

  // Maximal slice at random, then walk the chain downward composing
  // fresh increasing convex transforms.
  UtilityTable slice = gen_random_table(rng, domain, params.max_abs_numerator,
                                        params.max_denominator);
  set_slice(nt - 1, slice);
  for (std::size_t t = nt - 1; t-- > 0;) {
    PLTransform phi =
        gen_random_transform(rng, distinct_sorted_values(slice),
                             params.max_abs_numerator, params.max_denominator);
    std::vector<Rational> transformed(domain.size());
    for (std::size_t x = 0; x < domain.size(); ++x) {
      transformed[x] = apply_transform(phi, slice[x]);
    }
    slice = UtilityTable(domain, std::move(transformed));
    set_slice(t, slice);
  }
  return ParamUtilityTable(std::move(domain), std::move(chain), std::move(values));
}

}  // namespace riskorder
