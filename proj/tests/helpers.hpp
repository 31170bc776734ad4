// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "riskorder/crossing.hpp"
#include "riskorder/equivalence.hpp"
#include "riskorder/instances.hpp"
#include "riskorder/rng.hpp"

namespace riskorder::test {

inline Rational q(long long n, long long d = 1) { return Rational(Int(n), Int(d)); }

inline Alternatives abc(std::size_t n) {
  static const std::vector<std::string> names = {"a", "b", "c", "d", "e", "f"};
  return Alternatives(std::vector<std::string>(names.begin(), names.begin() + n));
}

inline UtilityTable table(const Alternatives& domain, std::vector<Rational> values) {
  return UtilityTable(domain, std::move(values));
}

inline UtilityTable itable(const Alternatives& domain, std::vector<long long> values) {
  std::vector<Rational> rs(values.begin(), values.end());
  return UtilityTable(domain, std::move(rs));
}

inline Poset chain(std::vector<std::string> elements) {
  std::vector<std::pair<std::string, std::string>> declared;
  for (std::size_t i = 0; i + 1 < elements.size(); ++i) {
    declared.emplace_back(elements[i], elements[i + 1]);
  }
  return Poset(std::move(elements), std::move(declared));
}

inline FunctionFamily family(
    const Poset& poset,
    std::vector<std::pair<std::string, std::vector<Rational>>> members) {
  std::vector<std::pair<std::string, ParamFunction>> fns;
  for (auto& [name, values] : members) {
    fns.emplace_back(name, ParamFunction(poset, std::move(values)));
  }
  return FunctionFamily(poset, std::move(fns));
}

inline Poset random_poset(Rng& rng, int n_elements, const Rational& density) {
  std::vector<std::string> elements;
  for (int i = 0; i < n_elements; ++i) elements.push_back("t" + std::to_string(i));
  std::vector<std::size_t> order(elements.size());
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  std::vector<std::pair<std::string, std::string>> declared;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      if (rng.chance(density)) {
        declared.emplace_back(elements[order[i]], elements[order[j]]);
      }
    }
  }
  return Poset(std::move(elements), std::move(declared));
}

inline UtilityPair random_pair(Rng& rng, int n, std::int64_t max_num,
                               std::int64_t max_den) {
  Alternatives domain = abc(static_cast<std::size_t>(n));
  UtilityTable u = gen_random_table(rng, domain, max_num, max_den);
  UtilityTable v = gen_random_table(rng, domain, max_num, max_den);
  return {std::move(u), std::move(v)};
}

inline FunctionFamily random_family(Rng& rng, int members, int n_params,
                                    const Rational& density, std::int64_t max_num,
                                    std::int64_t max_den) {
  Poset poset = random_poset(rng, n_params, density);
  std::vector<std::pair<std::string, ParamFunction>> fns;
  for (int m = 0; m < members; ++m) {
    std::vector<Rational> values(poset.size());
    for (auto& value : values) value = rng.rational(max_num, max_den);
    fns.emplace_back("f" + std::to_string(m), ParamFunction(poset, std::move(values)));
  }
  return FunctionFamily(std::move(poset), std::move(fns));
}

/// Random exact lottery: nonnegative integer counts normalized by their sum.
inline Lottery random_lottery(Rng& rng, const Alternatives& domain) {
  std::vector<long long> counts(domain.size(), 0);
  long long total = 0;
  while (total == 0) {
    total = 0;
    for (auto& c : counts) {
      c = rng.range(0, 4);
      total += c;
    }
  }
  std::vector<Rational> weights;
  weights.reserve(counts.size());
  for (long long c : counts) weights.push_back(q(c, total));
  return Lottery(domain, std::move(weights));
}

inline UtilityTable affine(const UtilityTable& t, const Rational& a, const Rational& b) {
  std::vector<Rational> values;
  values.reserve(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) values.push_back(a * t[i] + b);
  return UtilityTable(t.domain(), std::move(values));
}

inline UtilityTable transformed(const PLTransform& phi, const UtilityTable& v) {
  std::vector<Rational> values;
  values.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    values.push_back(apply_transform(phi, v[i]));
  }
  return UtilityTable(v.domain(), std::move(values));
}

inline FunctionFamily scale_member(const FunctionFamily& fam, std::size_t idx,
                                   const Rational& c) {
  std::vector<std::pair<std::string, ParamFunction>> members;
  for (std::size_t m = 0; m < fam.size(); ++m) {
    std::vector<Rational> values = fam.member(m).values();
    if (m == idx) {
      for (auto& value : values) value *= c;
    }
    members.emplace_back(fam.name(m), ParamFunction(fam.params(), std::move(values)));
  }
  return FunctionFamily(fam.params(), std::move(members));
}

}  // namespace riskorder::test
