// SPDX-License-Identifier: Apache-2.0
#include "riskorder/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "riskorder/equivalence.hpp"
#include "riskorder/errors.hpp"
#include "riskorder/report.hpp"
#include "riskorder/selftest.hpp"

namespace riskorder::cli {

namespace {

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kInputError = 2;
constexpr int kInternal = 3;

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream text;
  if (path == "-") {
    text << in.rdbuf();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
      throw ParseError("cannot open input file \"" + path + "\"");
    }
    text << file.rdbuf();
  }
  return text.str();
}

UtilityPair expect_pair(Instance instance) {
  if (auto* pair = std::get_if<UtilityPair>(&instance)) return std::move(*pair);
  throw ParseError("this command needs a utility-pair instance {alternatives,u,v}");
}

FamilyInstance expect_family(Instance instance) {
  if (auto* fam = std::get_if<FamilyInstance>(&instance)) return std::move(*fam);
  throw ParseError("this command needs a family instance {poset,functions}");
}

ParamInstance expect_param(Instance instance) {
  if (auto* par = std::get_if<ParamInstance>(&instance)) return std::move(*par);
  throw ParseError(
      "this command needs a parameterized instance {alternatives,poset,U}");
}

unsigned env_threads() {
  const char* raw = std::getenv("RISKORDER_THREADS");
  if (raw == nullptr) return 0;
  const std::string text(raw);
  std::size_t used = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || value < 1) {
    throw ParseError("RISKORDER_THREADS must be a positive integer");
  }
  return static_cast<unsigned>(value);
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

RiskOrderVerdict run_route(const std::string& method, const UtilityPair& pair,
                           unsigned denom_bound) {
  if (method == "definition") return check_lra_definition(pair.u, pair.v);
  if (method == "pratt") return check_lra_pratt(pair.u, pair.v);
  if (method == "transform") return check_lra_transform(pair.u, pair.v);
  if (method == "grid") return check_lra_grid(pair.u, pair.v, denom_bound);
  throw ParseError("unknown method \"" + method + "\"");
}

int cmd_check_lra(const std::string& method, unsigned denom_bound, bool json,
                  const std::string& text, std::ostream& out) {
  const UtilityPair pair = expect_pair(parse_instance(text));
  if (method != "all") {
    const RiskOrderVerdict verdict = run_route(method, pair, denom_bound);
    if (json) {
      emit_json(out, to_json(verdict));
    } else {
      out << describe(verdict, pair);
    }
    return verdict.holds ? kHolds : kFails;
  }

  const RiskOrderVerdict by_definition = check_lra_definition(pair.u, pair.v);
  const RiskOrderVerdict by_pratt = check_lra_pratt(pair.u, pair.v);
  const RiskOrderVerdict by_transform = check_lra_transform(pair.u, pair.v);
  if (by_definition.holds != by_pratt.holds ||
      by_definition.holds != by_transform.holds) {
    throw TheoremViolation(
        std::string("route disagreement: definition=") +
            (by_definition.holds ? "true" : "false") +
            " pratt=" + (by_pratt.holds ? "true" : "false") +
            " transform=" + (by_transform.holds ? "true" : "false"),
        to_json(pair).dump(2));
  }
  if (json) {
    Json routes = Json::object();
    routes["definition"] = to_json(by_definition);
    routes["pratt"] = to_json(by_pratt);
    routes["transform"] = to_json(by_transform);
    Json report = Json::object();
    report["holds"] = by_definition.holds;
    report["routes"] = std::move(routes);
    emit_json(out, report);
  } else {
    out << describe(by_definition, pair) << describe(by_pratt, pair)
        << describe(by_transform, pair);
  }
  return by_definition.holds ? kHolds : kFails;
}

int cmd_build_transform(bool json, const std::string& text, std::ostream& out) {
  const UtilityPair pair = expect_pair(parse_instance(text));
  const TransformResult result = build_transform(pair.u, pair.v);
  const bool success = std::holds_alternative<PLTransform>(result);
  if (json) {
    Json report = Json::object();
    report["success"] = success;
    report["transform"] =
        success ? to_json(std::get<PLTransform>(result)) : Json();
    report["error"] = success ? Json() : to_json(std::get<TransformError>(result));
    emit_json(out, report);
  } else if (success) {
    out << describe(std::get<PLTransform>(result));
  } else {
    out << describe(std::get<TransformError>(result));
  }
  return success ? kHolds : kFails;
}

int cmd_crossing_check(bool srm, bool json, const std::string& text,
                       std::ostream& out) {
  const FamilyInstance instance = expect_family(parse_instance(text));
  const CrossingVerdict verdict =
      srm ? check_srm(instance.family) : check_family_sc(instance.family);
  if (json) {
    emit_json(out, to_json(verdict));
  } else {
    out << (srm ? "signed-ratio monotonicity: " : "single-crossing: ")
        << describe(verdict, instance.family);
  }
  return verdict.holds ? kHolds : kFails;
}

int cmd_check_aggregate(const std::string& method, unsigned denom_bound, bool json,
                        const std::string& text, std::ostream& out) {
  const bool grid = method == "grid";
  Instance instance = parse_instance(text);

  if (auto* fam = std::get_if<FamilyInstance>(&instance)) {
    const CrossingVerdict verdict =
        grid ? check_mixture_sc_grid(fam->family, denom_bound)
             : check_mixture_sc(fam->family);
    if (json) {
      emit_json(out, to_json(verdict));
    } else {
      out << "mixture single-crossing: " << describe(verdict, fam->family);
    }
    return verdict.holds ? kHolds : kFails;
  }

  // Parameterized table: check the per-reference-alternative difference
  // families, which is the aggregate form the equivalence result uses.
  const ParamInstance par = expect_param(std::move(instance));
  bool holds = true;
  Json per_y = Json::object();
  std::ostringstream text_out;
  text_out << "mixture single-crossing of difference families:\n";
  for (std::size_t y = 0; y < par.table.alternatives().size(); ++y) {
    const std::string& label = par.table.alternatives().label(y);
    FunctionFamily family = differences_family(par.table, label);
    const CrossingVerdict verdict =
        grid ? check_mixture_sc_grid(family, denom_bound) : check_mixture_sc(family);
    holds = holds && verdict.holds;
    per_y[label] = to_json(verdict);
    text_out << "  y = " << label << ": " << describe(verdict, family);
  }
  if (json) {
    Json report = Json::object();
    report["holds"] = holds;
    report["per_y"] = std::move(per_y);
    emit_json(out, report);
  } else {
    out << text_out.str() << "overall: " << (holds ? "holds" : "FAILS") << "\n";
  }
  return holds ? kHolds : kFails;
}

int cmd_check_proposition(bool json, const std::string& text, std::ostream& out) {
  const ParamInstance instance = expect_param(parse_instance(text));
  const PropositionReport report = check_proposition(instance.table);
  if (json) {
    emit_json(out, to_json(report));
  } else {
    out << describe(report, instance.table);
  }
  return report.holds ? kHolds : kFails;
}

}  // namespace

int run(std::vector<std::string> argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact, witness-producing decision procedures for comparative "
               "risk aversion and single-crossing aggregation",
               "riskorder"};
  app.require_subcommand(1);

  std::string input_path;
  bool json = false;
  std::string method = "all";
  unsigned denom_bound = 6;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", input_path, "instance file, or - for stdin")
        ->required();
    sub->add_flag("--json", json, "emit a machine-readable verdict");
  };

  CLI::App* lra = app.add_subcommand(
      "check-lra", "decide whether u is less risk-averse than v");
  lra->add_option("--method", method, "definition | pratt | transform | grid | all")
      ->check(CLI::IsMember({"definition", "pratt", "transform", "grid", "all"}));
  CLI::Option* lra_bound = lra->add_option(
      "--denom-bound", denom_bound, "lottery denominator bound (grid method only)");
  add_input(lra);

  CLI::App* transform = app.add_subcommand(
      "build-transform", "synthesize the increasing convex transform with u = phi(v)");
  add_input(transform);

  CLI::App* sc = app.add_subcommand(
      "check-sc", "check that every family member is single-crossing");
  add_input(sc);

  CLI::App* srm = app.add_subcommand(
      "check-srm", "check signed-ratio monotonicity of a family");
  add_input(srm);

  CLI::App* aggregate = app.add_subcommand(
      "check-aggregate", "check that every mixture of the family is single-crossing");
  CLI::Option* agg_method =
      aggregate->add_option("--method", method, "exact | grid")
          ->check(CLI::IsMember({"exact", "grid"}));
  CLI::Option* agg_bound = aggregate->add_option(
      "--denom-bound", denom_bound, "mixture denominator bound (grid method only)");
  add_input(aggregate);

  CLI::App* proposition = app.add_subcommand(
      "check-proposition",
      "check the risk-order and single-crossing sides and assert they agree");
  add_input(proposition);

  InstanceGenParams gen_params;
  bool gen_positive = false;
  std::string density_text = "1/2";
  CLI::App* gen = app.add_subcommand("gen-random",
                                     "emit a random parameterized instance");
  gen->add_option("--seed", gen_params.seed, "generator seed");
  gen->add_option("--alternatives", gen_params.n_alternatives,
                  "alternative count (2..6)");
  gen->add_option("--params", gen_params.n_params, "parameter count (2..5)");
  CLI::Option* gen_density = gen->add_option(
      "--density", density_text, "relation density, a rational in [0,1]");
  gen->add_option("--max-numerator", gen_params.max_abs_numerator,
                  "numerator magnitude bound");
  gen->add_option("--max-denominator", gen_params.max_denominator,
                  "denominator bound");
  gen->add_flag("--positive", gen_positive,
                "constructive chain instance (risk-order side holds by construction)");

  int selftest_instances = 100;
  std::uint64_t selftest_seed = 0;
  bool selftest_inject = false;
  std::string reproducer_dir = ".";
  CLI::App* selftest = app.add_subcommand(
      "selftest", "run the randomized equivalence campaign");
  selftest->add_option("--instances", selftest_instances,
                       "random instance count (plus half as many constructive)");
  selftest->add_option("--seed", selftest_seed, "campaign seed");
  selftest->add_flag("--json", json, "emit a machine-readable summary");
  selftest->add_flag("--inject-fault", selftest_inject)->group("");  // test hook
  selftest->add_option("--reproducer-dir", reproducer_dir)->group("");

  try {
    std::reverse(argv.begin(), argv.end());
    app.parse(argv);
  } catch (const CLI::Error& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kHolds : kInputError;
  }

  try {
    if (lra->parsed()) {
      if (*lra_bound && method != "grid") {
        throw ParseError("--denom-bound applies to the grid method only");
      }
      return cmd_check_lra(method, denom_bound, json,
                           read_input(input_path, in), out);
    }
    if (transform->parsed()) {
      return cmd_build_transform(json, read_input(input_path, in), out);
    }
    if (sc->parsed()) {
      return cmd_crossing_check(false, json, read_input(input_path, in), out);
    }
    if (srm->parsed()) {
      return cmd_crossing_check(true, json, read_input(input_path, in), out);
    }
    if (aggregate->parsed()) {
      const std::string agg = *agg_method ? method : "exact";
      if (agg != "grid" && *agg_bound) {
        throw ParseError("--denom-bound applies to the grid method only");
      }
      return cmd_check_aggregate(agg, denom_bound, json,
                                 read_input(input_path, in), out);
    }
    if (proposition->parsed()) {
      return cmd_check_proposition(json, read_input(input_path, in), out);
    }
    if (gen->parsed()) {
      gen_params.relation_density = Rational::parse(density_text);
      if (gen_positive && !*gen_density) {
        gen_params.relation_density = Rational(1);  // chains need density 1
      }
      const ParamUtilityTable table = gen_positive
                                          ? gen_positive_instance(gen_params)
                                          : gen_random_instance(gen_params);
      emit_json(out, to_json(ParamInstance{table}));
      return kHolds;
    }
    if (selftest->parsed()) {
      SelftestOptions options;
      options.instances = selftest_instances;
      options.seed = selftest_seed;
      options.threads = env_threads();
      options.inject_fault = selftest_inject;
      options.reproducer_dir = reproducer_dir;
      const SelftestReport report = run_selftest(options);
      if (json) {
        emit_json(out, to_json(report));
      } else {
        out << describe(report);
      }
      return report.ok() ? kHolds : kInternal;
    }
    throw ParseError("no command given");
  } catch (const TheoremViolation& e) {
    const std::string file = "riskorder-reproducer.json";
    std::ofstream dump(file);
    dump << e.instance_json() << "\n";
    err << "theorem violation (this is a bug in riskorder, not in the input): "
        << e.what() << "\n";
    if (dump) {
      err << "reproducer written: " << file << "\n";
    }
    return kInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace riskorder::cli
