// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "riskorder/rational.hpp"

namespace riskorder {

/// Which implication of a ">= (>)" condition pair a witness violates.
enum class Part { weak, strict };

std::string to_string(Part part);

/// A non-empty ordered set of pairwise-distinct opaque labels. Labels
/// carry no numeric or order semantics; the stored order only fixes
/// iteration (and therefore witness) determinism.
class Alternatives {
public:
  explicit Alternatives(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::optional<std::size_t> find(std::string_view label) const;
  /// Throws UnknownAlternative.
  std::size_t index_of(std::string_view label) const;

  bool operator==(const Alternatives& o) const { return labels_ == o.labels_; }

private:
  std::vector<std::string> labels_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

/// A function from alternatives to exact rationals (a utility table).
class UtilityTable {
public:
  UtilityTable(Alternatives domain, std::vector<Rational> values);

  const Alternatives& domain() const { return domain_; }
  std::size_t size() const { return values_.size(); }
  const Rational& operator[](std::size_t i) const { return values_[i]; }
  const Rational& at(std::string_view label) const {
    return values_[domain_.index_of(label)];
  }
  const std::vector<Rational>& values() const { return values_; }

  bool operator==(const UtilityTable& o) const {
    return domain_ == o.domain_ && values_ == o.values_;
  }

private:
  Alternatives domain_;
  std::vector<Rational> values_;
};

/// A probability distribution over alternatives: nonnegative exact weights
/// summing to exactly one.
class Lottery {
public:
  Lottery(Alternatives domain, std::vector<Rational> weights);

  static Lottery point_mass(const Alternatives& domain, std::size_t i);
  /// Weight w on alternative i, 1-w on j; w must lie in [0,1].
  static Lottery two_point(const Alternatives& domain, std::size_t i,
                           std::size_t j, const Rational& w);

  const Alternatives& domain() const { return domain_; }
  const Rational& weight(std::size_t i) const { return weights_[i]; }
  const std::vector<Rational>& weights() const { return weights_; }
  /// Indices with strictly positive weight; never empty.
  std::vector<std::size_t> support() const;

  bool operator==(const Lottery& o) const {
    return domain_ == o.domain_ && weights_ == o.weights_;
  }

private:
  Alternatives domain_;
  std::vector<Rational> weights_;
};

/// Exact expected utility sum_x u(x) p(x). Throws DomainMismatch when the
/// table and the lottery disagree on the alternative set.
Rational expected_value(const UtilityTable& u, const Lottery& p);

/// Convex combination alpha*p + (1-alpha)*q, alpha in [0,1].
Lottery mix(const Lottery& p, const Lottery& q, const Rational& alpha);

}  // namespace riskorder
