// SPDX-License-Identifier: Apache-2.0
#include "riskorder/param_table.hpp"

#include "riskorder/errors.hpp"

namespace riskorder {

ParamFunction::ParamFunction(Poset params, std::vector<Rational> values)
    : params_(std::move(params)), values_(std::move(values)) {
  if (values_.size() != params_.size()) {
    throw InvariantError("parameter function must be totally defined on the poset");
  }
}

ParamUtilityTable::ParamUtilityTable(Alternatives alternatives, Poset params,
                                     std::vector<Rational> values)
    : alternatives_(std::move(alternatives)),
      params_(std::move(params)),
      values_(std::move(values)) {
  if (values_.size() != alternatives_.size() * params_.size()) {
    throw InvariantError(
        "parameterized table must be totally defined on alternatives x parameters");
  }
}

UtilityTable ParamUtilityTable::slice(std::size_t param) const {
  std::vector<Rational> values;
  values.reserve(alternatives_.size());
  for (std::size_t x = 0; x < alternatives_.size(); ++x) {
    values.push_back(value(x, param));
  }
  return UtilityTable(alternatives_, std::move(values));
}

ParamFunction ParamUtilityTable::curve(std::size_t alt) const {
  std::vector<Rational> values;
  values.reserve(params_.size());
  for (std::size_t t = 0; t < params_.size(); ++t) {
    values.push_back(value(alt, t));
  }
  return ParamFunction(params_, std::move(values));
}

}  // namespace riskorder
