// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "riskorder/instances.hpp"

namespace riskorder {

struct SelftestOptions {
  /// Random instance count; ceil(instances/2) constructive chain
  /// instances are run on top.
  int instances = 100;
  std::uint64_t seed = 0;
  /// 0 = one worker per hardware thread. Output is identical for every
  /// thread count.
  unsigned threads = 0;
  /// Test hook: flips one route verdict on the first instance so the
  /// violation path (reproducer dump, exit code 3) can be exercised.
  bool inject_fault = false;
  std::string reproducer_dir = ".";
};

struct SelftestReport {
  std::uint64_t seed = 0;
  int random_total = 0;
  int random_holds = 0;
  int constructive_total = 0;
  int constructive_holds = 0;
  /// Route disagreements (always implementation bugs).
  int theorem_violations = 0;
  /// Constructive instances that failed to hold; by construction they
  /// must, so these too indicate implementation bugs.
  int oracle_mismatches = 0;
  std::vector<std::string> reproducer_files;

  bool ok() const { return theorem_violations == 0 && oracle_mismatches == 0; }
};

/// Runs the randomized equivalence campaign: every instance is checked by
/// the definition, ordinal+compression, and mixture routes plus side (b),
/// and any disagreement is recorded with a reproducer file.
SelftestReport run_selftest(const SelftestOptions& options);

std::string describe(const SelftestReport& report);
Json to_json(const SelftestReport& report);

}  // namespace riskorder
