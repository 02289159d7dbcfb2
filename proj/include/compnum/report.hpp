// Copyright 2026 The compnum Authors
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

// JSON report emitted by `compnum compute --json`.
//
//   {
//     "input":   {"path": str, "n": int, "m": int},
//     "theta_E": int, "theta_E_restricted_triangle": int,
//     "not_in_triangle_count": int,
//     "opsut_lower": int, "opsut_upper": int, "main_upper": int,
//     "exact": int | null,
//     "verdict": {"status": "tight" | "not_tight" | "needs_exact",
//                 "rule": str, "detail": str},
//     "realization": str | null,      // path of the witness digraph file
//     "timing_ms": number
//   }

#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>

#include "compnum/bounds.hpp"
#include "compnum/error.hpp"
#include "json.hpp"

namespace compnum {

struct Report {
  std::string input_path;
  std::size_t n = 0;
  std::size_t m = 0;
  BoundsReport bounds;
  TightnessVerdict verdict;
  std::optional<std::string> realization;
  double timing_ms = 0.0;

  friend bool operator==(const Report& a, const Report& b) {
    return a.input_path == b.input_path && a.n == b.n && a.m == b.m && a.bounds.opsut_lower == b.bounds.opsut_lower &&
           a.bounds.opsut_upper == b.bounds.opsut_upper && a.bounds.main_upper == b.bounds.main_upper &&
           a.bounds.exact == b.bounds.exact && a.bounds.theta_E == b.bounds.theta_E &&
           a.bounds.theta_E_restricted_triangle == b.bounds.theta_E_restricted_triangle &&
           a.bounds.not_in_triangle_count == b.bounds.not_in_triangle_count && a.verdict == b.verdict &&
           a.realization == b.realization && a.timing_ms == b.timing_ms;
  }
};

inline nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["input"] = {{"path", r.input_path}, {"n", r.n}, {"m", r.m}};
  j["theta_E"] = r.bounds.theta_E;
  j["theta_E_restricted_triangle"] = r.bounds.theta_E_restricted_triangle;
  j["not_in_triangle_count"] = r.bounds.not_in_triangle_count;
  j["opsut_lower"] = r.bounds.opsut_lower;
  j["opsut_upper"] = r.bounds.opsut_upper;
  j["main_upper"] = r.bounds.main_upper;
  j["exact"] = r.bounds.exact ? nlohmann::ordered_json(*r.bounds.exact) : nlohmann::ordered_json(nullptr);
  j["verdict"] = {{"status", status_label(r.verdict.status)},
                  {"rule", rule_label(r.verdict.rule)},
                  {"detail", r.verdict.detail}};
  j["realization"] = r.realization ? nlohmann::ordered_json(*r.realization) : nlohmann::ordered_json(nullptr);
  j["timing_ms"] = r.timing_ms;
  return j;
}

namespace detail {

template <class Json>
void expect_keys(const Json& j, const std::set<std::string>& keys, const std::string& where) {
  if (!j.is_object()) throw MalformedInput(where + ": expected an object");
  for (const auto& [k, v] : j.items())
    if (!keys.count(k)) throw MalformedInput(where + ": unknown field '" + k + "'");
  for (const auto& k : keys)
    if (!j.contains(k)) throw MalformedInput(where + ": missing field '" + k + "'");
}

template <class Json>
Count get_int(const Json& j, const char* key) {
  const auto& v = j.at(key);
  if (!v.is_number_integer()) throw MalformedInput(std::string("field '") + key + "' must be an integer");
  return v.template get<Count>();
}

}  // namespace detail

/// Strict parse: unknown or missing fields and non-integer counts are errors.
inline Report report_from_json(const nlohmann::ordered_json& j) {
  detail::expect_keys(j,
                      {"input", "theta_E", "theta_E_restricted_triangle", "not_in_triangle_count", "opsut_lower",
                       "opsut_upper", "main_upper", "exact", "verdict", "realization", "timing_ms"},
                      "report");
  Report r;
  const auto& in = j.at("input");
  detail::expect_keys(in, {"path", "n", "m"}, "input");
  r.input_path = in.at("path").get<std::string>();
  r.n = static_cast<std::size_t>(detail::get_int(in, "n"));
  r.m = static_cast<std::size_t>(detail::get_int(in, "m"));
  r.bounds.theta_E = detail::get_int(j, "theta_E");
  r.bounds.theta_E_restricted_triangle = detail::get_int(j, "theta_E_restricted_triangle");
  r.bounds.not_in_triangle_count = detail::get_int(j, "not_in_triangle_count");
  r.bounds.opsut_lower = detail::get_int(j, "opsut_lower");
  r.bounds.opsut_upper = detail::get_int(j, "opsut_upper");
  r.bounds.main_upper = detail::get_int(j, "main_upper");
  if (!j.at("exact").is_null()) r.bounds.exact = detail::get_int(j, "exact");
  const auto& v = j.at("verdict");
  detail::expect_keys(v, {"status", "rule", "detail"}, "verdict");
  auto status = status_from_label(v.at("status").get<std::string>());
  auto rule = rule_from_label(v.at("rule").get<std::string>());
  if (!status) throw MalformedInput("verdict: unknown status");
  if (!rule) throw MalformedInput("verdict: unknown rule");
  r.verdict = {*status, *rule, v.at("detail").get<std::string>()};
  if (!j.at("realization").is_null()) r.realization = j.at("realization").get<std::string>();
  if (!j.at("timing_ms").is_number()) throw MalformedInput("field 'timing_ms' must be a number");
  r.timing_ms = j.at("timing_ms").get<double>();
  return r;
}

inline Report report_from_json(const std::string& text) {
  try {
    return report_from_json(nlohmann::ordered_json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInput(std::string("report: ") + e.what());
  }
}

}  // namespace compnum
