// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "riskorder/equivalence.hpp"
#include "riskorder/instances.hpp"
#include "riskorder/selftest.hpp"

using namespace riskorder;
using namespace riskorder::test;

namespace {

/// Two-parameter chain with slices u (low) and v (high).
ParamUtilityTable pair_table(const UtilityTable& u, const UtilityTable& v) {
  Poset poset = chain({"lo", "hi"});
  std::vector<Rational> values;
  for (std::size_t x = 0; x < u.size(); ++x) {
    values.push_back(u[x]);
    values.push_back(v[x]);
  }
  return ParamUtilityTable(u.domain(), std::move(poset), std::move(values));
}

ParamUtilityTable e1_table() {
  Alternatives dom = abc(3);
  return pair_table(itable(dom, {0, 1, 4}), itable(dom, {0, 1, 2}));
}

ParamUtilityTable reversal_table() {
  Alternatives dom = abc(2);
  return pair_table(itable(dom, {0, 1}), itable(dom, {1, 0}));
}

}  // namespace

TEST_CASE("differences family: zero member, constant member, subtraction") {
  Alternatives dom = abc(2);
  Poset poset = chain({"lo", "hi"});
  // U(a,.) = (1,1), U(b,.) = (0,3)
  ParamUtilityTable table(dom, poset, {q(1), q(1), q(0), q(3)});

  FunctionFamily at_a = differences_family(table, "a");
  CHECK(at_a.size() == 2);
  CHECK(at_a.name(0) == "a");
  CHECK(at_a.member(0).values() == std::vector<Rational>{q(0), q(0)});
  CHECK(at_a.member(1).values() == std::vector<Rational>{q(1), q(-2)});

  // Constant difference when the y-row exceeds the x-row by 1 everywhere.
  ParamUtilityTable flat(dom, poset, {q(1), q(1), q(0), q(0)});
  FunctionFamily flat_diffs = differences_family(flat, "a");
  CHECK(flat_diffs.member(1).values() == std::vector<Rational>{q(1), q(1)});

  CHECK_THROWS_AS(differences_family(table, "nope"), UnknownAlternative);

  // E1 slices: spot-check one difference value.
  FunctionFamily e1_diffs = differences_family(e1_table(), "c");
  CHECK(e1_diffs.member(0).values() == std::vector<Rational>{q(4), q(2)});
}

TEST_CASE("side (a): parameter-independent tables, empty relations, E1") {
  Alternatives dom = abc(3);
  Poset flat({"s", "t"}, {});
  ParamUtilityTable no_pairs(dom, flat, {q(0), q(0), q(1), q(1), q(4), q(4)});
  CHECK(check_prop_a(no_pairs).holds);
  CHECK(check_prop_a(no_pairs).pairs.empty());

  ParamUtilityTable constant = pair_table(itable(dom, {3, 1, 2}), itable(dom, {3, 1, 2}));
  CHECK(check_prop_a(constant).holds);

  SideA e1 = check_prop_a(e1_table());
  CHECK(e1.holds);
  CHECK(e1.pairs.size() == 1);
  CHECK(e1.pairs[0].theta == "lo");
  CHECK(e1.pairs[0].theta_prime == "hi");
}

TEST_CASE("side (b): constants hold, ordinal reversals fail at single-crossing") {
  Alternatives dom = abc(3);
  ParamUtilityTable constant = pair_table(itable(dom, {3, 1, 2}), itable(dom, {3, 1, 2}));
  SideB flat = check_prop_b(constant);
  CHECK(flat.holds);
  // Constant differences satisfy the product condition with equality.
  for (const auto& [_, verdict] : flat.srm) CHECK(verdict.holds);

  SideB reversed = check_prop_b(reversal_table());
  CHECK_FALSE(reversed.holds);
  CHECK_FALSE(reversed.sc.holds);

  CHECK(check_prop_b(e1_table()).holds);
}

TEST_CASE("check_proposition: fixtures agree on both sides") {
  PropositionReport e1 = check_proposition(e1_table());
  CHECK(e1.agree);
  CHECK(e1.holds);

  PropositionReport reversed = check_proposition(reversal_table());
  CHECK(reversed.agree);
  CHECK_FALSE(reversed.holds);
  CHECK_FALSE(reversed.side_a.holds);
}

TEST_CASE("proposition routes agree pairwise on random instances") {
  Rng rng(41);
  for (int i = 0; i < 150; ++i) {
    InstanceGenParams params;
    params.seed = rng.next_u64();
    params.n_alternatives = static_cast<int>(rng.range(2, 5));
    params.n_params = static_cast<int>(rng.range(2, 4));
    params.relation_density = q(rng.range(0, 4), 4);
    params.max_abs_numerator = 4;
    params.max_denominator = 3;
    PropositionRoutes routes = compute_proposition_routes(gen_random_instance(params));
    CHECK(routes.disagreement().empty());
    // Proof-route agreement, pair by pair.
    CHECK(routes.definition_by_pair == routes.pratt_by_pair);
    CHECK(routes.definition_by_pair == routes.mixture_by_pair);
  }
}

TEST_CASE("the zero member never affects family verdicts") {
  Rng rng(42);
  for (int i = 0; i < 100; ++i) {
    InstanceGenParams params;
    params.seed = rng.next_u64();
    params.n_alternatives = static_cast<int>(rng.range(2, 4));
    params.n_params = static_cast<int>(rng.range(2, 4));
    params.relation_density = q(1, 2);
    params.max_abs_numerator = 4;
    params.max_denominator = 2;
    ParamUtilityTable table = gen_random_instance(params);
    const std::string y = table.alternatives().label(0);
    FunctionFamily with_zero = differences_family(table, y);

    std::vector<std::pair<std::string, ParamFunction>> members;
    for (std::size_t m = 0; m < with_zero.size(); ++m) {
      if (with_zero.name(m) == y) continue;
      members.emplace_back(with_zero.name(m), with_zero.member(m));
    }
    FunctionFamily without_zero(with_zero.params(), std::move(members));

    CHECK(check_srm(with_zero).holds == check_srm(without_zero).holds);
    CHECK(check_mixture_sc(with_zero).holds == check_mixture_sc(without_zero).holds);
  }
}

TEST_CASE("slicing consistency: side (a) equals direct pairwise checks") {
  Rng rng(43);
  for (int i = 0; i < 50; ++i) {
    InstanceGenParams params;
    params.seed = rng.next_u64();
    params.n_alternatives = 3;
    params.n_params = 3;
    params.relation_density = q(1, 2);
    params.max_abs_numerator = 4;
    params.max_denominator = 2;
    ParamUtilityTable table = gen_random_instance(params);
    SideA side = check_prop_a(table);
    bool expected = true;
    for (const auto& [a, b] : table.params().strict_pairs()) {
      expected = expected &&
                 check_lra_definition(table.slice(a), table.slice(b)).holds;
    }
    CHECK(side.holds == expected);
  }
}

TEST_CASE("gen_random_instance: determinism and density extremes") {
  InstanceGenParams params;
  params.seed = 777;
  params.n_alternatives = 4;
  params.n_params = 4;
  params.relation_density = q(1, 2);
  const std::string once = to_json(ParamInstance{gen_random_instance(params)}).dump();
  const std::string twice = to_json(ParamInstance{gen_random_instance(params)}).dump();
  CHECK(once == twice);

  params.relation_density = q(0);
  CHECK(gen_random_instance(params).params().strict_pairs().empty());

  // Density 1 closes the full tournament on the sampled order: a chain.
  params.relation_density = q(1);
  params.n_params = 3;
  Poset poset = gen_random_instance(params).params();
  CHECK(poset.strict_pairs().size() == 3);  // 3 choose 2
}

TEST_CASE("gen_random_instance: parameter validation") {
  InstanceGenParams params;
  params.n_alternatives = 1;
  CHECK_THROWS_AS(gen_random_instance(params), InvariantError);
  params.n_alternatives = 3;
  params.n_params = 6;
  CHECK_THROWS_AS(gen_random_instance(params), InvariantError);
  params.n_params = 3;
  params.relation_density = q(3, 2);
  CHECK_THROWS_AS(gen_random_instance(params), InvariantError);
  params.relation_density = q(1, 2);
  params.max_denominator = 0;
  CHECK_THROWS_AS(gen_random_instance(params), InvariantError);
}

TEST_CASE("gen_positive_instance: both sides hold by construction") {
  Rng rng(44);
  for (int i = 0; i < 60; ++i) {
    InstanceGenParams params;
    params.seed = rng.next_u64();
    params.n_alternatives = static_cast<int>(rng.range(2, 5));
    params.n_params = static_cast<int>(rng.range(2, 5));
    params.relation_density = q(1);
    params.max_abs_numerator = 5;
    params.max_denominator = 3;
    ParamUtilityTable table = gen_positive_instance(params);
    CHECK(check_prop_a(table).holds);
    CHECK(check_prop_b(table).holds);  // implied, but checked rather than assumed
  }
}

TEST_CASE("gen_positive_instance rejects non-chain densities") {
  InstanceGenParams params;
  params.relation_density = q(1, 2);
  CHECK_THROWS_AS(gen_positive_instance(params), UnsupportedPoset);
}

TEST_CASE("selftest: clean runs and injected faults") {
  const auto dir = std::filesystem::temp_directory_path() / "riskorder-selftest-test";
  std::filesystem::create_directories(dir);

  SelftestOptions options;
  options.instances = 20;
  options.seed = 99;
  options.threads = 2;
  options.reproducer_dir = dir.string();
  SelftestReport clean = run_selftest(options);
  CHECK(clean.ok());
  CHECK(clean.random_total == 20);
  CHECK(clean.constructive_total == 10);
  CHECK(clean.constructive_holds == 10);
  CHECK(clean.reproducer_files.empty());

  options.inject_fault = true;
  SelftestReport faulty = run_selftest(options);
  CHECK_FALSE(faulty.ok());
  CHECK(faulty.theorem_violations == 1);
  REQUIRE(faulty.reproducer_files.size() == 1);
  CHECK(std::filesystem::exists(faulty.reproducer_files[0]));
  // The reproducer is a parseable instance.
  std::ifstream in(faulty.reproducer_files[0]);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(std::holds_alternative<ParamInstance>(parse_instance(text.str())));

  std::filesystem::remove_all(dir);
}

TEST_CASE("selftest output is independent of the thread count") {
  SelftestOptions a;
  a.instances = 12;
  a.seed = 5;
  a.threads = 1;
  SelftestOptions b = a;
  b.threads = 4;
  SelftestReport ra = run_selftest(a);
  SelftestReport rb = run_selftest(b);
  CHECK(to_json(ra).dump() == to_json(rb).dump());
}

TEST_CASE("a one-element parameter poset makes everything vacuous") {
  Alternatives dom = abc(3);
  Poset single({"only"}, {});
  ParamUtilityTable table(dom, single, {q(5), q(-1), q(2)});
  PropositionReport report = check_proposition(table);
  CHECK(report.holds);
  CHECK(report.agree);
  CHECK(report.side_a.pairs.empty());
}
