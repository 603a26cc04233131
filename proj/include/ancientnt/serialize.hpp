// SPDX-License-Identifier: Apache-2.0
#pragma once

// JSON forms of traces and counts. Every integer is a decimal string so that
// consumers never meet a width limit.
//
//   {"algorithm": "binary", "input": ["98", "63"],
//    "steps": [{"kind": "subtract", "operands": ["98", "63", "35"]}, ...],
//    "result": "7",
//    "counts": {"iterations": 3, "subtractions": 3, "shifts": 4,
//               "mod_reductions": 1, "comparisons": 4}}

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ancientnt/gcd.hpp"
#include "ancientnt/natural.hpp"

namespace ancientnt {

using nlohmann::json;

inline json naturals_to_json(const std::vector<Natural>& values) {
  json arr = json::array();
  for (const auto& v : values) arr.push_back(v.to_string());
  return arr;
}

inline Natural natural_from_json(const json& j) {
  if (!j.is_string()) throw std::invalid_argument("expected a decimal string");
  return Natural::parse(j.get<std::string>());
}

inline json counts_to_json(const OperationCounts& c) {
  return json{{"iterations", c.iterations},
              {"subtractions", c.subtractions},
              {"shifts", c.shifts},
              {"mod_reductions", c.mod_reductions},
              {"comparisons", c.comparisons}};
}

inline OperationCounts counts_from_json(const json& j) {
  OperationCounts c;
  c.iterations = j.at("iterations").get<std::uint64_t>();
  c.subtractions = j.at("subtractions").get<std::uint64_t>();
  c.shifts = j.at("shifts").get<std::uint64_t>();
  c.mod_reductions = j.at("mod_reductions").get<std::uint64_t>();
  c.comparisons = j.at("comparisons").get<std::uint64_t>();
  return c;
}

inline json trace_to_json(const GcdTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps) {
    steps.push_back(json{{"kind", std::string(step_kind_name(s.kind))}, {"operands", naturals_to_json(s.operands)}});
  }
  return json{{"algorithm", std::string(algorithm_name(t.algorithm))},
              {"input", naturals_to_json({t.inputs.first, t.inputs.second})},
              {"steps", std::move(steps)},
              {"result", t.result.to_string()},
              {"counts", counts_to_json(t.counts)}};
}

/// Inverse of trace_to_json. Throws std::invalid_argument or json exceptions on bad input.
inline GcdTrace trace_from_json(const json& j) {
  GcdTrace t;
  const auto algo = parse_algorithm(j.at("algorithm").get<std::string>());
  if (!algo) throw std::invalid_argument("unknown algorithm in trace");
  t.algorithm = *algo;
  const auto& in = j.at("input");
  if (!in.is_array() || in.size() != 2) throw std::invalid_argument("trace input must hold two values");
  t.inputs = {natural_from_json(in[0]), natural_from_json(in[1])};
  for (const auto& s : j.at("steps")) {
    const auto kind = parse_step_kind(s.at("kind").get<std::string>());
    if (!kind) throw std::invalid_argument("unknown step kind in trace");
    GcdStep step{*kind, {}};
    for (const auto& op : s.at("operands")) step.operands.push_back(natural_from_json(op));
    t.steps.push_back(std::move(step));
  }
  t.result = natural_from_json(j.at("result"));
  t.counts = counts_from_json(j.at("counts"));
  return t;
}

}  // namespace ancientnt
