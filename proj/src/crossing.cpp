// SPDX-License-Identifier: Apache-2.0
#include "riskorder/crossing.hpp"

#include <functional>

#include "riskorder/errors.hpp"

namespace riskorder {

FunctionFamily::FunctionFamily(
    Poset params, std::vector<std::pair<std::string, ParamFunction>> members)
    : params_(std::move(params)) {
  names_.reserve(members.size());
  members_.reserve(members.size());
  for (auto& [name, fn] : members) {
    if (!(fn.params() == params_)) {
      throw InvariantError("family member \"" + name +
                           "\" lives on a different parameter poset");
    }
    for (const auto& seen : names_) {
      if (seen == name) {
        throw InvariantError("duplicate family member name \"" + name + "\"");
      }
    }
    names_.push_back(std::move(name));
    members_.push_back(std::move(fn));
  }
}

std::size_t FunctionFamily::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  throw InvariantError("unknown family member \"" + std::string(name) + "\"");
}

namespace {

CrossingVerdict crossing_pass() { return {true, std::nullopt}; }

CrossingVerdict crossing_fail(CrossingWitness w) { return {false, std::move(w)}; }

std::optional<Part> sc_violation_part(const Rational& at, const Rational& at_prime) {
  if (at >= Rational(0) && at_prime < Rational(0)) return Part::weak;
  if (at > Rational(0) && at_prime <= Rational(0)) return Part::strict;
  return std::nullopt;
}

}  // namespace

CrossingVerdict check_single_crossing(const ParamFunction& fn) {
  const Poset& poset = fn.params();
  for (const auto& [a, b] : poset.strict_pairs()) {
    if (auto part = sc_violation_part(fn[a], fn[b])) {
      return crossing_fail(
          ScViolation{"", poset.element(a), poset.element(b), *part});
    }
  }
  return crossing_pass();
}

CrossingVerdict check_family_sc(const FunctionFamily& family) {
  const Poset& poset = family.params();
  for (std::size_t m = 0; m < family.size(); ++m) {
    const ParamFunction& fn = family.member(m);
    for (const auto& [a, b] : poset.strict_pairs()) {
      if (auto part = sc_violation_part(fn[a], fn[b])) {
        return crossing_fail(ScViolation{family.name(m), poset.element(a),
                                         poset.element(b), *part});
      }
    }
  }
  return crossing_pass();
}

CrossingVerdict check_srm(const FunctionFamily& family) {
  const Poset& poset = family.params();
  // The hypothesis phi(theta) < 0 < psi(theta) is not symmetric, so both
  // orderings of every member pair are tested.
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = 0; j < family.size(); ++j) {
      if (i == j) continue;
      const ParamFunction& phi = family.member(i);
      const ParamFunction& psi = family.member(j);
      for (const auto& [a, b] : poset.strict_pairs()) {
        if (!(phi[a].sign() < 0 && psi[a].sign() > 0)) continue;
        if (-phi[a] * psi[b] < -phi[b] * psi[a]) {
          return crossing_fail(SrmViolation{family.name(i), family.name(j),
                                            poset.element(a), poset.element(b)});
        }
      }
    }
  }
  return crossing_pass();
}

namespace {

MixtureViolation make_mixture_witness(const FunctionFamily& family,
                                      std::vector<std::pair<std::size_t, Rational>> w,
                                      std::size_t a, std::size_t b, Part part) {
  std::vector<std::pair<std::string, Rational>> named;
  for (auto& [idx, weight] : w) {
    if (weight.sign() > 0) named.emplace_back(family.name(idx), weight);
  }
  return MixtureViolation{std::move(named), family.params().element(a),
                          family.params().element(b), part};
}

}  // namespace

CrossingVerdict check_mixture_sc(const FunctionFamily& family) {
  if (family.size() == 0) {
    throw InvariantError("mixture check needs a non-empty family");
  }
  const Poset& poset = family.params();
  const std::size_t m = family.size();
  const Rational zero(0);

  for (const auto& [a, b] : poset.strict_pairs()) {
    auto at = [&](std::size_t i) -> const Rational& { return family.member(i)[a]; };
    auto at_prime = [&](std::size_t i) -> const Rational& { return family.member(i)[b]; };

    // Weak part: a mixture with s(theta) >= 0 and s(theta') < 0? The max
    // of -s(theta') over {s(theta) >= 0} is attained at a vertex of the
    // member simplex cut by one half-space: a feasible point mass or the
    // boundary point of a pair straddling zero at theta.
    for (std::size_t i = 0; i < m; ++i) {
      if (at(i) >= zero && at_prime(i) < zero) {
        return crossing_fail(
            make_mixture_witness(family, {{i, Rational(1)}}, a, b, Part::weak));
      }
    }
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        if (at(i).sign() * at(j).sign() >= 0) continue;  // need a strict straddle
        const Rational alpha = at(j) / (at(j) - at(i));  // s(theta) = 0
        const Rational s_prime =
            alpha * at_prime(i) + (Rational(1) - alpha) * at_prime(j);
        if (s_prime < zero) {
          return crossing_fail(make_mixture_witness(
              family, {{i, alpha}, {j, Rational(1) - alpha}}, a, b, Part::weak));
        }
      }
    }
    // Strict part, dualized to the closed program over {s(theta') <= 0}:
    // a mixture there with s(theta) > 0?
    for (std::size_t i = 0; i < m; ++i) {
      if (at(i) > zero && at_prime(i) <= zero) {
        return crossing_fail(
            make_mixture_witness(family, {{i, Rational(1)}}, a, b, Part::strict));
      }
    }
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        if (at_prime(i).sign() * at_prime(j).sign() >= 0) continue;
        const Rational beta = at_prime(j) / (at_prime(j) - at_prime(i));
        const Rational s = beta * at(i) + (Rational(1) - beta) * at(j);
        if (s > zero) {
          return crossing_fail(make_mixture_witness(
              family, {{i, beta}, {j, Rational(1) - beta}}, a, b, Part::strict));
        }
      }
    }
  }
  return crossing_pass();
}

namespace {

bool for_each_composition(unsigned total, std::size_t parts,
                          std::vector<unsigned>& counts, std::size_t pos,
                          const std::function<bool(const std::vector<unsigned>&)>& visit) {
  if (pos + 1 == parts) {
    counts[pos] = total;
    return visit(counts);
  }
  for (unsigned k = total + 1; k-- > 0;) {
    counts[pos] = k;
    if (!for_each_composition(total - k, parts, counts, pos + 1, visit)) {
      return false;
    }
  }
  return true;
}

}  // namespace

CrossingVerdict check_mixture_sc_grid(const FunctionFamily& family,
                                      unsigned denom_bound) {
  if (family.size() == 0) {
    throw InvariantError("mixture check needs a non-empty family");
  }
  if (denom_bound < 1) {
    throw InvariantError("grid denominator bound must be >= 1");
  }
  const Poset& poset = family.params();
  const std::size_t m = family.size();
  const Rational zero(0);

  CrossingVerdict verdict = crossing_pass();
  std::vector<unsigned> counts(m, 0);
  for (const auto& [a, b] : poset.strict_pairs()) {
    if (!verdict.holds) break;
    for_each_composition(denom_bound, m, counts, 0,
                         [&](const std::vector<unsigned>& c) {
                           Rational s, s_prime;
                           for (std::size_t i = 0; i < m; ++i) {
                             if (c[i] == 0) continue;
                             const Rational w{Int(c[i]), Int(denom_bound)};
                             s += family.member(i)[a] * w;
                             s_prime += family.member(i)[b] * w;
                           }
                           auto part = sc_violation_part(s, s_prime);
                           if (!part) return true;
                           std::vector<std::pair<std::size_t, Rational>> w;
                           for (std::size_t i = 0; i < m; ++i) {
                             w.emplace_back(i, Rational(Int(c[i]), Int(denom_bound)));
                           }
                           verdict = crossing_fail(make_mixture_witness(
                               family, std::move(w), a, b, *part));
                           return false;
                         });
  }
  return verdict;
}

CrossingVerdict srm_ratio_form(const FunctionFamily& family) {
  CrossingVerdict members_sc = check_family_sc(family);
  if (!members_sc.holds) {
    const auto& w = std::get<ScViolation>(*members_sc.witness);
    throw NotSingleCrossing("family member \"" + w.member +
                            "\" is not single-crossing; the ratio form is undefined");
  }
  const Poset& poset = family.params();
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = 0; j < family.size(); ++j) {
      if (i == j) continue;
      const ParamFunction& phi = family.member(i);
      const ParamFunction& psi = family.member(j);
      for (const auto& [a, b] : poset.strict_pairs()) {
        if (!(phi[a].sign() < 0 && psi[a].sign() > 0)) continue;
        // psi is single-crossing and positive at theta, so psi(theta') > 0.
        if (-phi[a] / psi[a] < -phi[b] / psi[b]) {
          return crossing_fail(SrmViolation{family.name(i), family.name(j),
                                            poset.element(a), poset.element(b)});
        }
      }
    }
  }
  return crossing_pass();
}

namespace {

struct CrossingWitnessVerifier {
  const FunctionFamily& family;

  bool comparable(const std::string& theta, const std::string& theta_prime) const {
    const Poset& poset = family.params();
    const std::size_t a = poset.index_of(theta);
    const std::size_t b = poset.index_of(theta_prime);
    return a != b && poset.leq(a, b);
  }

  bool operator()(const ScViolation& w) const {
    if (!comparable(w.theta, w.theta_prime)) return false;
    const ParamFunction& fn = family.member(family.index_of(w.member));
    return sc_violation_part(fn.at(w.theta), fn.at(w.theta_prime)) ==
           std::optional<Part>(w.part);
  }

  bool operator()(const SrmViolation& w) const {
    if (!comparable(w.theta, w.theta_prime)) return false;
    const ParamFunction& phi = family.member(family.index_of(w.phi));
    const ParamFunction& psi = family.member(family.index_of(w.psi));
    const Rational &pa = phi.at(w.theta), &sa = psi.at(w.theta);
    if (!(pa.sign() < 0 && sa.sign() > 0)) return false;
    return -pa * psi.at(w.theta_prime) < -phi.at(w.theta_prime) * sa;
  }

  bool operator()(const MixtureViolation& w) const {
    if (!comparable(w.theta, w.theta_prime)) return false;
    Rational total, s, s_prime;
    for (const auto& [name, weight] : w.weights) {
      if (weight.sign() < 0) return false;
      const ParamFunction& fn = family.member(family.index_of(name));
      total += weight;
      s += weight * fn.at(w.theta);
      s_prime += weight * fn.at(w.theta_prime);
    }
    if (total != Rational(1)) return false;
    return sc_violation_part(s, s_prime) == std::optional<Part>(w.part);
  }
};

}  // namespace

bool verify_witness(const FunctionFamily& family, const CrossingWitness& witness) {
  return std::visit(CrossingWitnessVerifier{family}, witness);
}

}  // namespace riskorder
