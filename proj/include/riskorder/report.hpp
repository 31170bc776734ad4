// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "riskorder/equivalence.hpp"
#include "riskorder/instances.hpp"

namespace riskorder {

// Machine-readable verdicts. The JSON and the human renderings below
// encode the same verdict; round-tripping the JSON reconstructs it.

Json to_json(const RiskOrderVerdict& verdict);
RiskOrderVerdict risk_verdict_from_json(const Json& j, const Alternatives& domain);

Json to_json(const CrossingVerdict& verdict);
CrossingVerdict crossing_verdict_from_json(const Json& j);

Json to_json(const PLTransform& phi);
Json to_json(const TransformError& error);
Json to_json(const PropositionReport& report);

std::string to_string(TransformError::Kind kind);

// Human-readable reports. Violations quote the violated inequality with
// exact rational values read back from the input, so every line can be
// checked by hand.

std::string describe(const RiskOrderVerdict& verdict, const UtilityPair& pair);
std::string describe(const CrossingVerdict& verdict, const FunctionFamily& family);
std::string describe(const PropositionReport& report, const ParamUtilityTable& table);
std::string describe(const PLTransform& phi);
std::string describe(const TransformError& error);

}  // namespace riskorder
