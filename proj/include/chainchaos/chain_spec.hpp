/*
 * Copyright 2026 The chainchaos Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * Copyright 2026 The chainchaos Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "chainchaos/digest.hpp"
#include "chainchaos/error.hpp"
#include "chainchaos/state_space.hpp"
#include "chainchaos/transition_model.hpp"

namespace chainchaos {

/**
 * Declarative chain description, the single config format consumed by the
 * command line.  Schema version 1:
 *
 * {
 *   "version": 1,
 *   "states": ["s1", "s2"],              // required, >= 2 labels
 *   "metric": "discrete" | [[...], ...], // optional, default "discrete"
 *   "order": 1,                          // optional, default 1
 *   "transitions": [[0.5, 0.5], ...],    // required, m^order rows
 *   "strict_positivity": false,          // optional
 *   "seed": 42,                          // optional, default 0
 *   "length": 1000                       // optional, default 1000
 * }
 *
 * Schema violations raise ConfigParseError naming the offending field
 * path, so a bad config is diagnosable without reading this header.
 */
struct ChainSpec {
  int version = 1;
  std::vector<std::string> states;
  std::optional<std::vector<std::vector<double>>> metric;  // nullopt = discrete
  int order = 1;
  std::vector<std::vector<double>> transitions;
  bool strict_positivity = false;
  std::uint64_t seed = 0;
  std::size_t length = 1000;

  StateSpace build_space() const {
    if (metric) {
      return StateSpace(*metric, states);
    }
    return StateSpace::discrete(static_cast<int>(states.size()), states);
  }

  TransitionModel build_model() const {
    return TransitionModel(transitions, static_cast<int>(states.size()), order,
                           strict_positivity);
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["version"] = version;
    j["states"] = states;
    if (metric) {
      j["metric"] = *metric;
    } else {
      j["metric"] = "discrete";
    }
    j["order"] = order;
    j["transitions"] = transitions;
    j["strict_positivity"] = strict_positivity;
    j["seed"] = seed;
    j["length"] = length;
    return j;
  }

  /// Digest over the canonical (key-sorted) JSON form; embedded in every
  /// artifact this spec produces.
  std::string digest() const {
    Digest d;
    d.update_string(to_json().dump());
    return d.hex();
  }
};

namespace detail {

inline Error spec_error(const std::string& path, const std::string& what) {
  return Error(errc::config_parse_error, path + ": " + what);
}

inline const nlohmann::json& require_field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) {
    throw spec_error(std::string("/") + key, "required field is missing");
  }
  return j.at(key);
}

inline std::vector<std::vector<double>> parse_table(const nlohmann::json& node,
                                                    const std::string& path) {
  if (!node.is_array()) throw spec_error(path, "expected an array of rows");
  std::vector<std::vector<double>> table;
  table.reserve(node.size());
  for (std::size_t i = 0; i < node.size(); ++i) {
    const auto& row = node[i];
    const std::string row_path = path + "/" + std::to_string(i);
    if (!row.is_array()) throw spec_error(row_path, "expected an array of numbers");
    std::vector<double> out;
    out.reserve(row.size());
    for (std::size_t k = 0; k < row.size(); ++k) {
      const auto& cell = row[k];
      if (!cell.is_number()) {
        throw spec_error(row_path + "/" + std::to_string(k), "expected a number");
      }
      out.push_back(cell.get<double>());
    }
    table.push_back(std::move(out));
  }
  return table;
}

}  // namespace detail

inline ChainSpec parse_chain_spec(const nlohmann::json& j) {
  using detail::require_field;
  using detail::spec_error;
  if (!j.is_object()) throw spec_error("/", "config root must be an object");

  ChainSpec spec;

  const auto& version = require_field(j, "version");
  if (!version.is_number_integer() || version.get<int>() != 1) {
    throw spec_error("/version", "unsupported schema version (expected 1)");
  }

  const auto& states = require_field(j, "states");
  if (!states.is_array() || states.size() < 2) {
    throw spec_error("/states", "expected an array of at least 2 labels");
  }
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (!states[i].is_string()) {
      throw spec_error("/states/" + std::to_string(i), "expected a string label");
    }
    spec.states.push_back(states[i].get<std::string>());
  }

  if (j.contains("metric")) {
    const auto& metric = j.at("metric");
    if (metric.is_string()) {
      if (metric.get<std::string>() != "discrete") {
        throw spec_error("/metric", "unknown metric name (only \"discrete\")");
      }
    } else {
      spec.metric = detail::parse_table(metric, "/metric");
    }
  }

  if (j.contains("order")) {
    const auto& order = j.at("order");
    if (!order.is_number_integer() || order.get<long long>() < 1) {
      throw spec_error("/order", "expected an integer >= 1");
    }
    spec.order = order.get<int>();
  }

  spec.transitions = detail::parse_table(require_field(j, "transitions"), "/transitions");

  if (j.contains("strict_positivity")) {
    const auto& strict = j.at("strict_positivity");
    if (!strict.is_boolean()) throw spec_error("/strict_positivity", "expected a boolean");
    spec.strict_positivity = strict.get<bool>();
  }

  if (j.contains("seed")) {
    const auto& seed = j.at("seed");
    if (!seed.is_number_unsigned() && !seed.is_number_integer()) {
      throw spec_error("/seed", "expected a nonnegative integer");
    }
    if (seed.is_number_integer() && !seed.is_number_unsigned() &&
        seed.get<long long>() < 0) {
      throw spec_error("/seed", "expected a nonnegative integer");
    }
    spec.seed = seed.get<std::uint64_t>();
  }

  if (j.contains("length")) {
    const auto& length = j.at("length");
    if ((!length.is_number_unsigned() && !length.is_number_integer()) ||
        (length.is_number_integer() && length.get<long long>() < 1)) {
      throw spec_error("/length", "expected an integer >= 1");
    }
    spec.length = length.get<std::size_t>();
  }

  for (const auto& [key, value] : j.items()) {
    (void)value;
    static const char* known[] = {"version",           "states", "metric", "order",
                                  "transitions",       "seed",   "length",
                                  "strict_positivity"};
    bool ok = false;
    for (const char* k : known) {
      if (key == k) {
        ok = true;
        break;
      }
    }
    if (!ok) throw spec_error("/" + key, "unknown field");
  }

  return spec;
}

inline ChainSpec load_chain_spec(const std::string& file_path) {
  std::ifstream in(file_path);
  if (!in) {
    throw Error(errc::config_parse_error, "cannot open config file " + file_path);
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(errc::config_parse_error,
                "invalid JSON in " + file_path + ": " + e.what());
  }
  return parse_chain_spec(j);
}

}  // namespace chainchaos
