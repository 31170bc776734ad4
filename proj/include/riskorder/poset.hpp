// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "riskorder/errors.hpp"

namespace riskorder {

/// A finite partially ordered set. Constructed from an arbitrary declared
/// relation, which is closed reflexively and transitively; construction
/// rejects relations whose closure would make two distinct elements
/// mutually comparable (CycleError).
class Poset {
public:
  Poset(std::vector<std::string> elements,
        std::vector<std::pair<std::string, std::string>> declared);

  std::size_t size() const { return elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& element(std::size_t i) const { return elements_[i]; }
  std::size_t index_of(std::string_view element) const;

  /// Comparability after closure (reflexive: leq(i, i) is always true).
  bool leq(std::size_t a, std::size_t b) const { return leq_[a * size() + b]; }

  /// All comparable pairs (a, b) with a != b, lexicographic by element
  /// index. Every check in this library quantifies over exactly these;
  /// reflexive pairs are skipped because the conditions are automatic
  /// when the two parameters coincide.
  const std::vector<std::pair<std::size_t, std::size_t>>& strict_pairs() const {
    return strict_pairs_;
  }

  const std::vector<std::pair<std::string, std::string>>& declared() const {
    return declared_;
  }

  /// Same elements in the same order and the same comparability relation;
  /// the declared relations may differ.
  bool operator==(const Poset& o) const {
    return elements_ == o.elements_ && leq_ == o.leq_;
  }

private:
  std::vector<std::string> elements_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::vector<std::pair<std::string, std::string>> declared_;
  std::vector<char> leq_;  // row-major closure matrix
  std::vector<std::pair<std::size_t, std::size_t>> strict_pairs_;
};

/// Smallest reflexive transitive relation containing `declared`, returned
/// as explicit label pairs sorted lexicographically by element index.
/// Throws CycleError if antisymmetry would fail and InvariantError if a
/// pair endpoint is not an element.
std::vector<std::pair<std::string, std::string>> transitive_closure(
    const std::vector<std::string>& elements,
    const std::vector<std::pair<std::string, std::string>>& declared);

}  // namespace riskorder
