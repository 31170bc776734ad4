// SPDX-License-Identifier: Apache-2.0
#include "riskorder/instances.hpp"

#include <limits>
#include <set>

#include "riskorder/errors.hpp"

namespace riskorder {

namespace {

void reject_unknown_fields(const Json& obj, const std::set<std::string>& allowed,
                           const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.contains(key)) {
      throw ParseError(where + ": unknown field \"" + key + "\"");
    }
  }
}

const Json& require_field(const Json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ParseError(where + ": missing field \"" + key + "\"");
  }
  return *it;
}

std::vector<std::string> string_list(const Json& j, const std::string& path) {
  if (!j.is_array()) {
    throw ParseError(path + ": expected an array of strings");
  }
  std::vector<std::string> out;
  out.reserve(j.size());
  for (const auto& item : j) {
    if (!item.is_string()) {
      throw ParseError(path + "[" + std::to_string(out.size()) +
                       "]: expected a string");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

/// Values object keyed by exactly the given labels (any order).
std::vector<Rational> values_by_label(const Json& j,
                                      const std::vector<std::string>& labels,
                                      const std::map<std::string, std::size_t, std::less<>>& index,
                                      const std::string& path) {
  if (!j.is_object()) {
    throw ParseError(path + ": expected an object of rationals");
  }
  std::vector<Rational> out(labels.size());
  std::vector<bool> seen(labels.size(), false);
  for (const auto& [key, value] : j.items()) {
    auto it = index.find(key);
    if (it == index.end()) {
      throw ParseError(path + "." + key + ": not a declared label");
    }
    out[it->second] = rational_from_json(value, path + "." + key);
    seen[it->second] = true;
  }
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!seen[i]) {
      throw ParseError(path + ": missing value for \"" + labels[i] + "\"");
    }
  }
  return out;
}

std::map<std::string, std::size_t, std::less<>> make_index(
    const std::vector<std::string>& labels) {
  std::map<std::string, std::size_t, std::less<>> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);
  return index;
}

Poset poset_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) {
    throw ParseError(path + ": expected an object");
  }
  reject_unknown_fields(j, {"elements", "relation"}, path);
  auto elements = string_list(require_field(j, "elements", path), path + ".elements");
  const Json& rel = require_field(j, "relation", path);
  if (!rel.is_array()) {
    throw ParseError(path + ".relation: expected an array of pairs");
  }
  std::vector<std::pair<std::string, std::string>> declared;
  std::size_t k = 0;
  for (const auto& item : rel) {
    const std::string at = path + ".relation[" + std::to_string(k++) + "]";
    if (!item.is_array() || item.size() != 2 || !item[0].is_string() ||
        !item[1].is_string()) {
      throw ParseError(at + ": expected a pair of element names");
    }
    declared.emplace_back(item[0].get<std::string>(), item[1].get<std::string>());
    for (const auto& end : {declared.back().first, declared.back().second}) {
      bool known = false;
      for (const auto& e : elements) known |= (e == end);
      if (!known) throw ParseError(at + ": \"" + end + "\" is not an element");
    }
  }
  return Poset(std::move(elements), std::move(declared));
}

UtilityPair utility_pair_from_json(const Json& j) {
  reject_unknown_fields(j, {"alternatives", "u", "v"}, "instance");
  auto labels = string_list(require_field(j, "alternatives", "instance"),
                            "alternatives");
  auto index = make_index(labels);
  Alternatives domain(labels);
  auto u_values = values_by_label(require_field(j, "u", "instance"), labels, index, "u");
  auto v_values = values_by_label(require_field(j, "v", "instance"), labels, index, "v");
  return UtilityPair{UtilityTable(domain, std::move(u_values)),
                     UtilityTable(domain, std::move(v_values))};
}

FamilyInstance family_from_json(const Json& j) {
  reject_unknown_fields(j, {"poset", "functions"}, "instance");
  Poset poset = poset_from_json(require_field(j, "poset", "instance"), "poset");
  const Json& fns = require_field(j, "functions", "instance");
  if (!fns.is_object()) {
    throw ParseError("functions: expected an object");
  }
  auto index = make_index(poset.elements());
  std::vector<std::pair<std::string, ParamFunction>> members;
  for (const auto& [name, values] : fns.items()) {
    members.emplace_back(name,
                         ParamFunction(poset, values_by_label(values, poset.elements(),
                                                              index,
                                                              "functions." + name)));
  }
  return FamilyInstance{FunctionFamily(std::move(poset), std::move(members))};
}

ParamInstance param_from_json(const Json& j) {
  reject_unknown_fields(j, {"alternatives", "poset", "U"}, "instance");
  auto labels = string_list(require_field(j, "alternatives", "instance"),
                            "alternatives");
  Alternatives domain(labels);
  Poset poset = poset_from_json(require_field(j, "poset", "instance"), "poset");
  const Json& table = require_field(j, "U", "instance");
  if (!table.is_object()) {
    throw ParseError("U: expected an object");
  }
  auto elem_index = make_index(poset.elements());
  std::vector<Rational> values(labels.size() * poset.size());
  std::vector<bool> seen(labels.size(), false);
  for (const auto& [label, row] : table.items()) {
    auto alt = domain.find(label);
    if (!alt) {
      throw ParseError("U." + label + ": not a declared alternative");
    }
    auto row_values =
        values_by_label(row, poset.elements(), elem_index, "U." + label);
    for (std::size_t t = 0; t < poset.size(); ++t) {
      values[*alt * poset.size() + t] = std::move(row_values[t]);
    }
    seen[*alt] = true;
  }
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!seen[i]) {
      throw ParseError("U: missing row for \"" + labels[i] + "\"");
    }
  }
  return ParamInstance{
      ParamUtilityTable(std::move(domain), std::move(poset), std::move(values))};
}

}  // namespace

Instance parse_instance(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) {
    throw ParseError("instance: expected a JSON object");
  }
  if (j.contains("u") || j.contains("v")) {
    return utility_pair_from_json(j);
  }
  if (j.contains("U")) {
    return param_from_json(j);
  }
  if (j.contains("functions")) {
    return family_from_json(j);
  }
  throw ParseError(
      "instance: expected a utility pair {alternatives,u,v}, a family "
      "{poset,functions}, or a parameterized table {alternatives,poset,U}");
}

Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) {
    return Rational(static_cast<long long>(j.get<std::int64_t>()));
  }
  if (j.is_number_unsigned()) {
    return Rational(Int(j.get<std::uint64_t>()));
  }
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(path + ": " + e.what());
    }
  }
  if (j.is_number_float()) {
    throw ParseError(path +
                     ": non-integer JSON numbers are inexact; write the value "
                     "as a string \"p/q\"");
  }
  throw ParseError(path + ": expected a rational (integer or \"p/q\" string)");
}

Json rational_to_json(const Rational& r) {
  if (r.is_integer() && r.num() >= std::numeric_limits<std::int64_t>::min() &&
      r.num() <= std::numeric_limits<std::int64_t>::max()) {
    return Json(static_cast<std::int64_t>(r.num()));
  }
  return Json(r.str());
}

Lottery lottery_from_json(const Alternatives& domain, const Json& j,
                          const std::string& path) {
  if (!j.is_object()) {
    throw ParseError(path + ": expected a weight object");
  }
  std::vector<Rational> weights(domain.size());
  for (const auto& [label, value] : j.items()) {
    auto idx = domain.find(label);
    if (!idx) {
      throw ParseError(path + "." + label + ": not a declared label");
    }
    weights[*idx] = rational_from_json(value, path + "." + label);
  }
  return Lottery(domain, std::move(weights));
}

Json lottery_to_json(const Lottery& p) {
  Json out = Json::object();
  for (std::size_t i : p.support()) {
    out[p.domain().label(i)] = rational_to_json(p.weight(i));
  }
  return out;
}

namespace {

Json poset_to_json(const Poset& poset) {
  Json out = Json::object();
  out["elements"] = poset.elements();
  Json rel = Json::array();
  for (const auto& [a, b] : poset.declared()) {
    rel.push_back(Json::array({a, b}));
  }
  out["relation"] = std::move(rel);
  return out;
}

Json table_to_json(const UtilityTable& t) {
  Json out = Json::object();
  for (std::size_t i = 0; i < t.size(); ++i) {
    out[t.domain().label(i)] = rational_to_json(t[i]);
  }
  return out;
}

}  // namespace

Json to_json(const UtilityPair& pair) {
  Json out = Json::object();
  out["alternatives"] = pair.u.domain().labels();
  out["u"] = table_to_json(pair.u);
  out["v"] = table_to_json(pair.v);
  return out;
}

Json to_json(const FamilyInstance& instance) {
  const FunctionFamily& family = instance.family;
  Json out = Json::object();
  out["poset"] = poset_to_json(family.params());
  Json fns = Json::object();
  for (std::size_t m = 0; m < family.size(); ++m) {
    Json values = Json::object();
    for (std::size_t t = 0; t < family.params().size(); ++t) {
      values[family.params().element(t)] = rational_to_json(family.member(m)[t]);
    }
    fns[family.name(m)] = std::move(values);
  }
  out["functions"] = std::move(fns);
  return out;
}

Json to_json(const ParamInstance& instance) {
  const ParamUtilityTable& table = instance.table;
  Json out = Json::object();
  out["alternatives"] = table.alternatives().labels();
  out["poset"] = poset_to_json(table.params());
  Json rows = Json::object();
  for (std::size_t x = 0; x < table.alternatives().size(); ++x) {
    Json row = Json::object();
    for (std::size_t t = 0; t < table.params().size(); ++t) {
      row[table.params().element(t)] = rational_to_json(table.value(x, t));
    }
    rows[table.alternatives().label(x)] = std::move(row);
  }
  out["U"] = std::move(rows);
  return out;
}

Json instance_to_json(const Instance& instance) {
  return std::visit([](const auto& i) { return to_json(i); }, instance);
}

}  // namespace riskorder
