// SPDX-License-Identifier: Apache-2.0
#include "riskorder/report.hpp"

#include <sstream>

#include "riskorder/errors.hpp"

namespace riskorder {

namespace {

Part part_from_string(const std::string& s, const std::string& path) {
  if (s == "weak") return Part::weak;
  if (s == "strict") return Part::strict;
  throw ParseError(path + ": unknown part \"" + s + "\"");
}

Route route_from_string(const std::string& s, const std::string& path) {
  if (s == "definition") return Route::definition;
  if (s == "pratt") return Route::pratt;
  if (s == "transform") return Route::transform;
  if (s == "grid") return Route::grid;
  throw ParseError(path + ": unknown route \"" + s + "\"");
}

Json lra_witness_to_json(const LraWitness& witness) {
  Json out = Json::object();
  if (const auto* w = std::get_if<OrdinalViolation>(&witness)) {
    out["type"] = "ordinal";
    out["x"] = w->x;
    out["y"] = w->y;
  } else if (const auto* w = std::get_if<CompressionViolation>(&witness)) {
    out["type"] = "compression";
    out["x"] = w->x;
    out["y"] = w->y;
    out["z"] = w->z;
  } else {
    const auto& m = std::get<LotteryViolation>(witness);
    out["type"] = "lottery";
    out["y"] = m.y;
    out["part"] = to_string(m.part);
    out["p"] = lottery_to_json(m.p);
  }
  return out;
}

Json crossing_witness_to_json(const CrossingWitness& witness) {
  Json out = Json::object();
  if (const auto* w = std::get_if<ScViolation>(&witness)) {
    out["type"] = "single_crossing";
    out["member"] = w->member;
    out["theta"] = w->theta;
    out["theta_prime"] = w->theta_prime;
    out["part"] = to_string(w->part);
  } else if (const auto* w = std::get_if<SrmViolation>(&witness)) {
    out["type"] = "srm";
    out["phi"] = w->phi;
    out["psi"] = w->psi;
    out["theta"] = w->theta;
    out["theta_prime"] = w->theta_prime;
  } else {
    const auto& m = std::get<MixtureViolation>(witness);
    out["type"] = "mixture";
    Json weights = Json::object();
    for (const auto& [name, weight] : m.weights) {
      weights[name] = rational_to_json(weight);
    }
    out["p"] = std::move(weights);
    out["theta"] = m.theta;
    out["theta_prime"] = m.theta_prime;
    out["part"] = to_string(m.part);
  }
  return out;
}

}  // namespace

Json to_json(const RiskOrderVerdict& verdict) {
  Json out = Json::object();
  out["holds"] = verdict.holds;
  out["route"] = to_string(verdict.route);
  out["witness"] = verdict.witness ? lra_witness_to_json(*verdict.witness) : Json();
  return out;
}

RiskOrderVerdict risk_verdict_from_json(const Json& j, const Alternatives& domain) {
  RiskOrderVerdict verdict;
  verdict.holds = j.at("holds").get<bool>();
  verdict.route = route_from_string(j.at("route").get<std::string>(), "route");
  const Json& w = j.at("witness");
  if (w.is_null()) return verdict;
  const std::string type = w.at("type").get<std::string>();
  if (type == "ordinal") {
    verdict.witness = OrdinalViolation{w.at("x").get<std::string>(),
                                       w.at("y").get<std::string>()};
  } else if (type == "compression") {
    verdict.witness =
        CompressionViolation{w.at("x").get<std::string>(), w.at("y").get<std::string>(),
                             w.at("z").get<std::string>()};
  } else if (type == "lottery") {
    verdict.witness = LotteryViolation{
        w.at("y").get<std::string>(),
        lottery_from_json(domain, w.at("p"), "witness.p"),
        part_from_string(w.at("part").get<std::string>(), "witness.part")};
  } else {
    throw ParseError("witness.type: unknown witness type \"" + type + "\"");
  }
  return verdict;
}

Json to_json(const CrossingVerdict& verdict) {
  Json out = Json::object();
  out["holds"] = verdict.holds;
  out["witness"] = verdict.witness ? crossing_witness_to_json(*verdict.witness) : Json();
  return out;
}

CrossingVerdict crossing_verdict_from_json(const Json& j) {
  CrossingVerdict verdict;
  verdict.holds = j.at("holds").get<bool>();
  const Json& w = j.at("witness");
  if (w.is_null()) return verdict;
  const std::string type = w.at("type").get<std::string>();
  if (type == "single_crossing") {
    verdict.witness = ScViolation{
        w.at("member").get<std::string>(), w.at("theta").get<std::string>(),
        w.at("theta_prime").get<std::string>(),
        part_from_string(w.at("part").get<std::string>(), "witness.part")};
  } else if (type == "srm") {
    verdict.witness = SrmViolation{
        w.at("phi").get<std::string>(), w.at("psi").get<std::string>(),
        w.at("theta").get<std::string>(), w.at("theta_prime").get<std::string>()};
  } else if (type == "mixture") {
    std::vector<std::pair<std::string, Rational>> weights;
    for (const auto& [name, value] : w.at("p").items()) {
      weights.emplace_back(name, rational_from_json(value, "witness.p." + name));
    }
    verdict.witness = MixtureViolation{
        std::move(weights), w.at("theta").get<std::string>(),
        w.at("theta_prime").get<std::string>(),
        part_from_string(w.at("part").get<std::string>(), "witness.part")};
  } else {
    throw ParseError("witness.type: unknown witness type \"" + type + "\"");
  }
  return verdict;
}

std::string to_string(TransformError::Kind kind) {
  switch (kind) {
    case TransformError::Kind::not_well_defined: return "not_well_defined";
    case TransformError::Kind::not_increasing: return "not_increasing";
    case TransformError::Kind::not_convex: return "not_convex";
  }
  return "?";
}

Json to_json(const PLTransform& phi) {
  Json knots = Json::array();
  for (const auto& knot : phi.knots()) {
    Json k = Json::object();
    k["t"] = rational_to_json(knot.t);
    k["value"] = rational_to_json(knot.value);
    knots.push_back(std::move(k));
  }
  Json out = Json::object();
  out["knots"] = std::move(knots);
  out["domain"] = Json::array(
      {rational_to_json(phi.domain_min()), rational_to_json(phi.domain_max())});
  return out;
}

Json to_json(const TransformError& error) {
  Json out = Json::object();
  out["kind"] = to_string(error.kind);
  out["x"] = error.x;
  out["y"] = error.y;
  if (error.kind == TransformError::Kind::not_convex) {
    out["z"] = error.z;
    out["knot_index"] = error.knot_index;
  }
  return out;
}

Json to_json(const PropositionReport& report) {
  Json out = Json::object();
  out["holds"] = report.holds;
  out["agree"] = report.agree;

  Json side_a = Json::object();
  side_a["holds"] = report.side_a.holds;
  Json pairs = Json::array();
  for (const auto& pair : report.side_a.pairs) {
    Json p = Json::object();
    p["theta"] = pair.theta;
    p["theta_prime"] = pair.theta_prime;
    p["verdict"] = to_json(pair.verdict);
    pairs.push_back(std::move(p));
  }
  side_a["pairs"] = std::move(pairs);
  out["side_a"] = std::move(side_a);

  Json side_b = Json::object();
  bool b_holds = report.side_b_sc.holds;
  for (const auto& [_, verdict] : report.side_b_srm) b_holds = b_holds && verdict.holds;
  side_b["holds"] = b_holds;
  side_b["single_crossing"] = to_json(report.side_b_sc);
  Json srm = Json::object();
  for (const auto& [y, verdict] : report.side_b_srm) {
    srm[y] = to_json(verdict);
  }
  side_b["srm"] = std::move(srm);
  out["side_b"] = std::move(side_b);
  return out;
}

namespace {

std::string lottery_str(const Lottery& p) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : p.support()) {
    if (!first) out += ", ";
    first = false;
    out += p.domain().label(i) + ": " + p.weight(i).str();
  }
  return out + "}";
}

void describe_lra_witness(std::ostringstream& os, const LraWitness& witness,
                          const UtilityPair& pair) {
  const UtilityTable& u = pair.u;
  const UtilityTable& v = pair.v;
  if (const auto* w = std::get_if<OrdinalViolation>(&witness)) {
    const Rational &ux = u.at(w->x), &uy = u.at(w->y);
    const Rational &vx = v.at(w->x), &vy = v.at(w->y);
    os << "  ordinal violation (x = " << w->x << ", y = " << w->y << ")\n";
    if (ux >= uy && vx < vy) {
      os << "  u(" << w->x << ") = " << ux << " >= u(" << w->y << ") = " << uy
         << ", but v(" << w->x << ") = " << vx << " < v(" << w->y << ") = " << vy
         << "\n";
    } else {
      os << "  u(" << w->x << ") = " << ux << " > u(" << w->y << ") = " << uy
         << ", but v(" << w->x << ") = " << vx << " <= v(" << w->y << ") = " << vy
         << "\n";
    }
  } else if (const auto* w = std::get_if<CompressionViolation>(&witness)) {
    const Rational lhs = (u.at(w->z) - u.at(w->y)) / (u.at(w->y) - u.at(w->x));
    const Rational rhs = (v.at(w->z) - v.at(w->y)) / (v.at(w->y) - v.at(w->x));
    os << "  compression violation (x = " << w->x << ", y = " << w->y
       << ", z = " << w->z << ")\n";
    os << "  (u(" << w->z << ")-u(" << w->y << "))/(u(" << w->y << ")-u(" << w->x
       << ")) = " << lhs << " < (v(" << w->z << ")-v(" << w->y << "))/(v(" << w->y
       << ")-v(" << w->x << ")) = " << rhs << "\n";
  } else {
    const auto& m = std::get<LotteryViolation>(witness);
    const Rational eu = expected_value(u, m.p);
    const Rational ev = expected_value(v, m.p);
    os << "  lottery violation at y = " << m.y << " (" << to_string(m.part)
       << " part): p = " << lottery_str(m.p) << "\n";
    if (m.part == Part::weak) {
      os << "  u(" << m.y << ") = " << u.at(m.y) << " >= E_p[u] = " << eu
         << ", but v(" << m.y << ") = " << v.at(m.y) << " < E_p[v] = " << ev << "\n";
    } else {
      os << "  u(" << m.y << ") = " << u.at(m.y) << " > E_p[u] = " << eu
         << ", but v(" << m.y << ") = " << v.at(m.y) << " <= E_p[v] = " << ev << "\n";
    }
  }
}

}  // namespace

std::string describe(const RiskOrderVerdict& verdict, const UtilityPair& pair) {
  std::ostringstream os;
  os << to_string(verdict.route) << " route: "
     << (verdict.holds ? "holds" : "FAILS") << "\n";
  if (verdict.witness) {
    describe_lra_witness(os, *verdict.witness, pair);
  }
  return os.str();
}

namespace {

void describe_crossing_witness(std::ostringstream& os, const CrossingWitness& witness,
                               const FunctionFamily& family) {
  if (const auto* w = std::get_if<ScViolation>(&witness)) {
    const ParamFunction& fn = family.member(family.index_of(w->member));
    const Rational &a = fn.at(w->theta), &b = fn.at(w->theta_prime);
    os << "  single-crossing violation for \"" << w->member << "\" at " << w->theta
       << " <= " << w->theta_prime << " (" << to_string(w->part) << " part)\n";
    if (w->part == Part::weak) {
      os << "  f(" << w->theta << ") = " << a << " >= 0, but f(" << w->theta_prime
         << ") = " << b << " < 0\n";
    } else {
      os << "  f(" << w->theta << ") = " << a << " > 0, but f(" << w->theta_prime
         << ") = " << b << " <= 0\n";
    }
  } else if (const auto* w = std::get_if<SrmViolation>(&witness)) {
    const ParamFunction& phi = family.member(family.index_of(w->phi));
    const ParamFunction& psi = family.member(family.index_of(w->psi));
    const Rational lhs = -phi.at(w->theta) * psi.at(w->theta_prime);
    const Rational rhs = -phi.at(w->theta_prime) * psi.at(w->theta);
    os << "  signed-ratio violation (phi = " << w->phi << ", psi = " << w->psi
       << ") at " << w->theta << " <= " << w->theta_prime << "\n";
    os << "  phi(" << w->theta << ") = " << phi.at(w->theta) << " < 0 < psi("
       << w->theta << ") = " << psi.at(w->theta) << ", but -phi(" << w->theta
       << ")*psi(" << w->theta_prime << ") = " << lhs << " < -phi(" << w->theta_prime
       << ")*psi(" << w->theta << ") = " << rhs << "\n";
  } else {
    const auto& m = std::get<MixtureViolation>(witness);
    Rational s, s_prime;
    std::string weights = "{";
    bool first = true;
    for (const auto& [name, weight] : m.weights) {
      const ParamFunction& fn = family.member(family.index_of(name));
      s += weight * fn.at(m.theta);
      s_prime += weight * fn.at(m.theta_prime);
      if (!first) weights += ", ";
      first = false;
      weights += name + ": " + weight.str();
    }
    weights += "}";
    os << "  mixture violation at " << m.theta << " <= " << m.theta_prime << " ("
       << to_string(m.part) << " part): p = " << weights << "\n";
    if (m.part == Part::weak) {
      os << "  mix(" << m.theta << ") = " << s << " >= 0, but mix(" << m.theta_prime
         << ") = " << s_prime << " < 0\n";
    } else {
      os << "  mix(" << m.theta << ") = " << s << " > 0, but mix(" << m.theta_prime
         << ") = " << s_prime << " <= 0\n";
    }
  }
}

}  // namespace

std::string describe(const CrossingVerdict& verdict, const FunctionFamily& family) {
  std::ostringstream os;
  os << (verdict.holds ? "holds" : "FAILS") << "\n";
  if (verdict.witness) {
    describe_crossing_witness(os, *verdict.witness, family);
  }
  return os.str();
}

std::string describe(const PropositionReport& report, const ParamUtilityTable& table) {
  std::ostringstream os;
  os << "risk-order side (a): " << (report.side_a.holds ? "holds" : "FAILS") << "\n";
  for (const auto& pair : report.side_a.pairs) {
    os << "  " << pair.theta << " <= " << pair.theta_prime << ": "
       << (pair.verdict.holds ? "holds" : "FAILS") << "\n";
    if (pair.verdict.witness) {
      const std::size_t a = table.params().index_of(pair.theta);
      const std::size_t b = table.params().index_of(pair.theta_prime);
      UtilityPair slice_pair{table.slice(a), table.slice(b)};
      std::ostringstream inner;
      describe_lra_witness(inner, *pair.verdict.witness, slice_pair);
      os << inner.str();
    }
  }
  bool b_holds = report.side_b_sc.holds;
  for (const auto& [_, verdict] : report.side_b_srm) b_holds = b_holds && verdict.holds;
  os << "single-crossing side (b): " << (b_holds ? "holds" : "FAILS") << "\n";
  os << "  pairwise differences single-crossing: "
     << (report.side_b_sc.holds ? "holds" : "FAILS") << "\n";
  if (report.side_b_sc.witness) {
    describe_crossing_witness(os, *report.side_b_sc.witness,
                              pairwise_differences_family(table));
  }
  for (const auto& [y, verdict] : report.side_b_srm) {
    os << "  signed-ratio monotonicity at y = " << y << ": "
       << (verdict.holds ? "holds" : "FAILS") << "\n";
    if (verdict.witness) {
      describe_crossing_witness(os, *verdict.witness, differences_family(table, y));
    }
  }
  os << "sides agree: " << (report.agree ? "yes" : "NO") << "\n";
  return os.str();
}

std::string describe(const PLTransform& phi) {
  std::ostringstream os;
  os << "increasing convex transform with " << phi.knots().size() << " knot(s) on ["
     << phi.domain_min() << ", " << phi.domain_max() << "]\n";
  for (const auto& knot : phi.knots()) {
    os << "  phi(" << knot.t << ") = " << knot.value << "\n";
  }
  return os.str();
}

std::string describe(const TransformError& error) {
  std::ostringstream os;
  switch (error.kind) {
    case TransformError::Kind::not_well_defined:
      os << "no transform exists: v(" << error.x << ") = v(" << error.y
         << ") but u(" << error.x << ") != u(" << error.y << ")\n";
      break;
    case TransformError::Kind::not_increasing:
      os << "no increasing transform exists: v(" << error.x << ") < v(" << error.y
         << ") but u(" << error.x << ") >= u(" << error.y << ")\n";
      break;
    case TransformError::Kind::not_convex:
      os << "no convex transform exists: chord slopes decrease at knot "
         << error.knot_index << " (alternatives " << error.x << ", " << error.y
         << ", " << error.z << ")\n";
      break;
  }
  return os.str();
}

}  // namespace riskorder
