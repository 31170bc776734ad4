// SPDX-License-Identifier: Apache-2.0
#include "riskorder/core.hpp"

#include "riskorder/errors.hpp"

namespace riskorder {

std::string to_string(Part part) {
  return part == Part::weak ? "weak" : "strict";
}

Alternatives::Alternatives(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (labels_.empty()) {
    throw InvariantError("alternative set is empty");
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], i).second) {
      throw InvariantError("duplicate alternative label \"" + labels_[i] + "\"");
    }
  }
}

std::optional<std::size_t> Alternatives::find(std::string_view label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Alternatives::index_of(std::string_view label) const {
  auto it = index_.find(label);
  if (it == index_.end()) {
    throw UnknownAlternative("unknown alternative \"" + std::string(label) + "\"");
  }
  return it->second;
}

UtilityTable::UtilityTable(Alternatives domain, std::vector<Rational> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
  if (values_.size() != domain_.size()) {
    throw InvariantError("utility table must assign a value to exactly the labels in its domain");
  }
}

Lottery::Lottery(Alternatives domain, std::vector<Rational> weights)
    : domain_(std::move(domain)), weights_(std::move(weights)) {
  if (weights_.size() != domain_.size()) {
    throw InvariantError("lottery must weight exactly the labels in its domain");
  }
  Rational sum;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i].sign() < 0) {
      throw InvariantError("lottery weight for \"" + domain_.label(i) + "\" is negative");
    }
    sum += weights_[i];
  }
  if (sum != Rational(1)) {
    throw InvariantError("lottery weights sum to " + sum.str() + ", not 1");
  }
}

Lottery Lottery::point_mass(const Alternatives& domain, std::size_t i) {
  std::vector<Rational> w(domain.size());
  w[i] = Rational(1);
  return Lottery(domain, std::move(w));
}

Lottery Lottery::two_point(const Alternatives& domain, std::size_t i,
                           std::size_t j, const Rational& w) {
  std::vector<Rational> weights(domain.size());
  weights[i] = w;
  weights[j] += Rational(1) - w;  // += so i == j degenerates to a point mass
  return Lottery(domain, std::move(weights));
}

std::vector<std::size_t> Lottery::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i].sign() > 0) out.push_back(i);
  }
  return out;
}

Rational expected_value(const UtilityTable& u, const Lottery& p) {
  if (!(u.domain() == p.domain())) {
    throw DomainMismatch("utility table and lottery have different alternative sets");
  }
  Rational sum;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!p.weight(i).is_zero()) {
      sum += u[i] * p.weight(i);
    }
  }
  return sum;
}

Lottery mix(const Lottery& p, const Lottery& q, const Rational& alpha) {
  if (!(p.domain() == q.domain())) {
    throw DomainMismatch("cannot mix lotteries over different alternative sets");
  }
  if (alpha.sign() < 0 || alpha > Rational(1)) {
    throw InvariantError("mixing weight must lie in [0,1]");
  }
  std::vector<Rational> w(p.domain().size());
  const Rational beta = Rational(1) - alpha;
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = alpha * p.weight(i) + beta * q.weight(i);
  }
  return Lottery(p.domain(), std::move(w));
}

}  // namespace riskorder
