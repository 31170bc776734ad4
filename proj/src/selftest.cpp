// SPDX-License-Identifier: Apache-2.0
#include "riskorder/selftest.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include "riskorder/equivalence.hpp"
#include "riskorder/errors.hpp"
#include "riskorder/rng.hpp"

namespace riskorder {

namespace {

struct InstanceResult {
  bool constructive = false;
  bool holds = false;
  std::string violation;      // route disagreement, empty if none
  std::string instance_json;  // set when a reproducer is needed
};

InstanceResult evaluate(const InstanceGenParams& params, bool constructive,
                        bool flip_one_route) {
  InstanceResult result;
  result.constructive = constructive;
  const ParamUtilityTable table =
      constructive ? gen_positive_instance(params) : gen_random_instance(params);
  PropositionRoutes routes = compute_proposition_routes(table);
  if (flip_one_route) {
    routes.mixture_all = !routes.mixture_all;
  }
  result.violation = routes.disagreement();
  result.holds = routes.side_a_definition.holds;
  if (!result.violation.empty() || (constructive && !result.holds)) {
    result.instance_json = to_json(ParamInstance{table}).dump(2);
  }
  return result;
}

void run_indexed(std::size_t count, unsigned threads,
                 const std::function<void(std::size_t)>& body) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  const auto n_workers =
      static_cast<unsigned>(std::min<std::size_t>(threads, count));
  workers.reserve(n_workers);
  for (unsigned w = 0; w < n_workers; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
        body(i);
      }
    });
  }
  for (auto& worker : workers) worker.join();
}

}  // namespace

SelftestReport run_selftest(const SelftestOptions& options) {
  if (options.instances < 1) {
    throw InvariantError("selftest needs at least one instance");
  }
  SelftestReport report;
  report.seed = options.seed;
  const int n_random = options.instances;
  const int n_constructive = (options.instances + 1) / 2;

  // Per-instance generator parameters come from one master stream, so the
  // whole campaign is a deterministic function of the seed.
  Rng master(options.seed);
  std::vector<InstanceGenParams> specs;
  std::vector<bool> constructive;
  specs.reserve(static_cast<std::size_t>(n_random + n_constructive));
  static const Rational kDensities[] = {Rational(0), Rational(Int(1), Int(4)),
                                        Rational(Int(1), Int(2)),
                                        Rational(Int(3), Int(4)), Rational(1)};
  for (int i = 0; i < n_random; ++i) {
    InstanceGenParams params;
    params.seed = master.next_u64();
    params.n_alternatives = static_cast<int>(master.range(2, 6));
    params.n_params = static_cast<int>(master.range(2, 5));
    params.relation_density = kDensities[master.below(5)];
    params.max_abs_numerator = 6;
    params.max_denominator = 3;
    specs.push_back(params);
    constructive.push_back(false);
  }
  for (int i = 0; i < n_constructive; ++i) {
    InstanceGenParams params;
    params.seed = master.next_u64();
    params.n_alternatives = static_cast<int>(master.range(2, 6));
    params.n_params = static_cast<int>(master.range(2, 5));
    params.relation_density = Rational(1);
    params.max_abs_numerator = 6;
    params.max_denominator = 3;
    specs.push_back(params);
    constructive.push_back(true);
  }

  unsigned threads = options.threads;
  if (threads == 0) {
    threads = std::max(1u, std::thread::hardware_concurrency());
  }
  std::vector<InstanceResult> results(specs.size());
  run_indexed(specs.size(), threads, [&](std::size_t i) {
    results[i] = evaluate(specs[i], constructive[i],
                          options.inject_fault && i == 0);
  });

  for (std::size_t i = 0; i < results.size(); ++i) {
    const InstanceResult& r = results[i];
    if (r.constructive) {
      ++report.constructive_total;
      if (r.holds) ++report.constructive_holds;
    } else {
      ++report.random_total;
      if (r.holds) ++report.random_holds;
    }
    const bool mismatch = r.constructive && r.violation.empty() && !r.holds;
    if (!r.violation.empty() || mismatch) {
      if (!r.violation.empty()) {
        ++report.theorem_violations;
      } else {
        ++report.oracle_mismatches;
      }
      std::ostringstream name;
      name << options.reproducer_dir << "/riskorder-reproducer-" << options.seed
           << "-" << i << ".json";
      std::ofstream out(name.str());
      out << r.instance_json << "\n";
      if (!out) {
        throw Error("cannot write reproducer file " + name.str());
      }
      report.reproducer_files.push_back(name.str());
    }
  }
  return report;
}

std::string describe(const SelftestReport& report) {
  std::ostringstream os;
  os << "selftest seed " << report.seed << "\n";
  os << "  random instances:       " << report.random_total << " (hold: "
     << report.random_holds << ")\n";
  os << "  constructive instances: " << report.constructive_total << " (hold: "
     << report.constructive_holds << ")\n";
  os << "  route disagreements:    " << report.theorem_violations << "\n";
  os << "  oracle mismatches:      " << report.oracle_mismatches << "\n";
  for (const auto& file : report.reproducer_files) {
    os << "  reproducer written: " << file << "\n";
  }
  os << (report.ok() ? "OK" : "FAILED") << "\n";
  return os.str();
}

Json to_json(const SelftestReport& report) {
  Json out = Json::object();
  out["seed"] = report.seed;
  out["random_total"] = report.random_total;
  out["random_holds"] = report.random_holds;
  out["constructive_total"] = report.constructive_total;
  out["constructive_holds"] = report.constructive_holds;
  out["theorem_violations"] = report.theorem_violations;
  out["oracle_mismatches"] = report.oracle_mismatches;
  out["reproducers"] = report.reproducer_files;
  out["ok"] = report.ok();
  return out;
}

}  // namespace riskorder
