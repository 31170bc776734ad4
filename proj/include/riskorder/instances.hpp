// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "riskorder/crossing.hpp"
#include "riskorder/param_table.hpp"

namespace riskorder {

using Json = nlohmann::ordered_json;  // preserves field order from the document

/// Two utility tables on one alternative set:
///   {"alternatives": [...], "u": {label: rational, ...}, "v": {...}}
struct UtilityPair {
  UtilityTable u, v;
};

/// A named function family on a poset:
///   {"poset": {"elements": [...], "relation": [["a","b"], ...]},
///    "functions": {name: {element: rational, ...}, ...}}
struct FamilyInstance {
  FunctionFamily family;
};

/// A parameterized utility table:
///   {"alternatives": [...], "poset": {...}, "U": {label: {element: rational}}}
struct ParamInstance {
  ParamUtilityTable table;
};

using Instance = std::variant<UtilityPair, FamilyInstance, ParamInstance>;

/// Parses any of the three instance shapes, deciding which by the fields
/// present. Rationals are JSON integers or strings "p" / "p/q"; unknown
/// fields are rejected. Errors are ParseError (malformed text, with a
/// field path), InvariantError, or CycleError.
Instance parse_instance(std::string_view text);

Json to_json(const UtilityPair& pair);
Json to_json(const FamilyInstance& instance);
Json to_json(const ParamInstance& instance);
Json instance_to_json(const Instance& instance);

Rational rational_from_json(const Json& j, const std::string& path);
Json rational_to_json(const Rational& r);

/// Lotteries serialize as a support-only weight object {label: rational};
/// absent labels carry weight zero.
Lottery lottery_from_json(const Alternatives& domain, const Json& j,
                          const std::string& path);
Json lottery_to_json(const Lottery& p);

}  // namespace riskorder
