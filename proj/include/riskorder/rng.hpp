// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "riskorder/rational.hpp"

namespace riskorder {

/// Deterministic random source. mt19937_64 is fully specified by the
/// standard; the bounded draws below avoid std distributions, whose output
/// is implementation-defined, so a seed reproduces the same stream on any
/// platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, n) by rejection; n >= 1.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t r;
    do {
      r = engine_();
    } while (r >= limit);
    return r % n;
  }

  /// Uniform in [lo, hi], inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  /// Exact Bernoulli: true with probability exactly p (p in [0,1]).
  bool chance(const Rational& p) {
    const std::uint64_t r = engine_();
    // r/2^64 < p  <=>  r * den < num * 2^64
    return Int(r) * p.den() < p.num() << 64;
  }

  /// Uniform numerator in [-max_abs_num, max_abs_num] over uniform
  /// denominator in [1, max_den], reduced.
  Rational rational(std::int64_t max_abs_num, std::int64_t max_den) {
    const std::int64_t num = range(-max_abs_num, max_abs_num);
    const std::int64_t den = range(1, max_den);
    return Rational(Int(num), Int(den));
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

private:
  std::mt19937_64 engine_;
};

}  // namespace riskorder
