// SPDX-License-Identifier: Apache-2.0
#include "riskorder/poset.hpp"

namespace riskorder {

Poset::Poset(std::vector<std::string> elements,
             std::vector<std::pair<std::string, std::string>> declared)
    : elements_(std::move(elements)), declared_(std::move(declared)) {
  if (elements_.empty()) {
    throw InvariantError("poset element set is empty");
  }
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (!index_.emplace(elements_[i], i).second) {
      throw InvariantError("duplicate poset element \"" + elements_[i] + "\"");
    }
  }

  const std::size_t n = elements_.size();
  leq_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) leq_[i * n + i] = 1;
  for (const auto& [a, b] : declared_) {
    leq_[index_of(a) * n + index_of(b)] = 1;
  }
  // Warshall closure; n is small everywhere this library is used.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!leq_[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (leq_[k * n + j]) leq_[i * n + j] = 1;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (leq_[i * n + j] && leq_[j * n + i]) {
        throw CycleError("elements \"" + elements_[i] + "\" and \"" + elements_[j] +
                         "\" would be mutually comparable");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && leq_[i * n + j]) strict_pairs_.emplace_back(i, j);
    }
  }
}

std::size_t Poset::index_of(std::string_view element) const {
  auto it = index_.find(element);
  if (it == index_.end()) {
    throw InvariantError("unknown poset element \"" + std::string(element) + "\"");
  }
  return it->second;
}

std::vector<std::pair<std::string, std::string>> transitive_closure(
    const std::vector<std::string>& elements,
    const std::vector<std::pair<std::string, std::string>>& declared) {
  Poset poset(elements, declared);
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < poset.size(); ++i) {
    for (std::size_t j = 0; j < poset.size(); ++j) {
      if (poset.leq(i, j)) {
        out.emplace_back(poset.element(i), poset.element(j));
      }
    }
  }
  return out;
}

}  // namespace riskorder
