// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "riskorder/core.hpp"
#include "riskorder/poset.hpp"

namespace riskorder {

/// A function from poset elements to exact rationals, totally defined.
class ParamFunction {
public:
  ParamFunction(Poset params, std::vector<Rational> values);

  const Poset& params() const { return params_; }
  std::size_t size() const { return values_.size(); }
  const Rational& operator[](std::size_t i) const { return values_[i]; }
  const Rational& at(std::string_view element) const {
    return values_[params_.index_of(element)];
  }
  const std::vector<Rational>& values() const { return values_; }

  bool operator==(const ParamFunction& o) const {
    return params_ == o.params_ && values_ == o.values_;
  }

private:
  Poset params_;
  std::vector<Rational> values_;
};

/// A parameterized utility table: one exact rational per
/// (alternative, parameter) pair, totally defined.
class ParamUtilityTable {
public:
  /// `values` is row-major: values[alt * params.size() + param].
  ParamUtilityTable(Alternatives alternatives, Poset params,
                    std::vector<Rational> values);

  const Alternatives& alternatives() const { return alternatives_; }
  const Poset& params() const { return params_; }
  const Rational& value(std::size_t alt, std::size_t param) const {
    return values_[alt * params_.size() + param];
  }

  /// The utility table at a fixed parameter.
  UtilityTable slice(std::size_t param) const;
  /// The function of the parameter at a fixed alternative.
  ParamFunction curve(std::size_t alt) const;

private:
  Alternatives alternatives_;
  Poset params_;
  std::vector<Rational> values_;
};

}  // namespace riskorder
