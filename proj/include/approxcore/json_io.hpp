// Copyright 2026 The approxcore Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON views of results and reports. Every rational crosses this boundary as
// a reduced-fraction string ("a" or "a/b"); vertex ids are 1-based.

#ifndef APPROXCORE_JSON_IO_HPP
#define APPROXCORE_JSON_IO_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "approxcore/instance.hpp"
#include "approxcore/mechanism.hpp"
#include "approxcore/rational.hpp"
#include "approxcore/verification.hpp"

namespace approxcore {

using nlohmann::json;

namespace detail {

inline json fraction_array(const std::vector<Money>& values) {
  json out = json::array();
  for (const Money& m : values) out.push_back(to_string(m));
  return out;
}

inline json one_based(const Coalition& s) {
  json out = json::array();
  for (Vertex i : s.members) out.push_back(i + 1);
  return out;
}

}  // namespace detail

inline json to_json(const GameInstance& g, const ImputationResult& r) {
  json matching = json::array();
  for (std::size_t k : r.matching) {
    matching.push_back({g.edge(k).u + 1, g.edge(k).v + 1});
  }
  return {
      {"values", detail::fraction_array(r.c)},
      {"matching", std::move(matching)},
      {"factors", detail::fraction_array(r.f.f)},
      {"cover", detail::fraction_array(r.cover)},
      {"allocated", to_string(r.allocated)},
      {"matching_weight", to_string(r.matching_weight)},
      {"fractional_optimum", to_string(r.worth_fractional)},
      {"factor_guarantee", to_string(r.factor_guarantee)},
  };
}

inline json to_json(const CoalitionReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"coalition", detail::one_based(v.coalition)},
                          {"worth", std::to_string(v.worth)},
                          {"allocated", to_string(v.allocated)}});
  }
  json tight = json::array();
  for (const auto& s : r.tight_coalitions) tight.push_back(detail::one_based(s));
  json out = {
      {"alpha", to_string(r.alpha)},
      {"mode", to_string(r.mode)},
      {"checked_count", r.checked_count},
      {"violation_count", r.violation_count},
      {"violations", std::move(violations)},
      {"tight_count", r.tight_count},
      {"tight_coalitions", std::move(tight)},
      {"allocated", to_string(r.allocated_total)},
      {"passed", r.passed()},
  };
  out["worst_ratio"] = r.worst_ratio ? json(to_string(*r.worst_ratio)) : json();
  out["grand_worth"] = r.grand_worth ? json(std::to_string(*r.grand_worth)) : json();
  out["budget_ok"] = r.budget_ok ? json(*r.budget_ok) : json();
  return out;
}

inline json to_json(const GapReport& r) {
  json out;
  out["opt_integral"] =
      r.opt_integral ? json(std::to_string(*r.opt_integral)) : json();
  out["opt_fractional"] = to_string(r.opt_fractional);
  out["ratio"] = r.ratio ? json(to_string(*r.ratio)) : json();
  out["core_nonempty"] = r.core_nonempty ? json(*r.core_nonempty) : json("unknown");
  return out;
}

/// Reads the "values" array of an imputation file. Entries are fraction
/// strings; plain JSON integers are accepted too.
inline std::vector<Money> parse_imputation(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("imputation: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("values") || !doc["values"].is_array()) {
    throw std::invalid_argument("imputation: expected an object with a \"values\" array");
  }
  std::vector<Money> out;
  for (const json& entry : doc["values"]) {
    if (entry.is_number_integer()) {
      out.emplace_back(entry.get<std::int64_t>());
      continue;
    }
    if (!entry.is_string()) {
      throw std::invalid_argument("imputation: values must be fraction strings");
    }
    auto m = parse_money(entry.get<std::string>());
    if (!m) {
      throw std::invalid_argument("imputation: bad fraction \"" +
                                  entry.get<std::string>() + "\"");
    }
    out.push_back(std::move(*m));
  }
  return out;
}

inline json imputation_json(const std::vector<Money>& values) {
  return {{"values", detail::fraction_array(values)}};
}

}  // namespace approxcore

#endif  // APPROXCORE_JSON_IO_HPP
