// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace riskorder::cli {

/// Runs one command; argv excludes the program name. Exit codes:
///   0  the checked property holds (or the command has no property)
///   1  the property fails; a witness is printed
///   2  input error (malformed flags, file, or instance)
///   3  internal theorem violation (a reproducer instance is dumped)
/// Output is byte-identical for identical argv + input.
int run(std::vector<std::string> argv, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace riskorder::cli
