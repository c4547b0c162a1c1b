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

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chainchaos {

/// Failure categories raised by validation and analysis operations.
enum class errc {
  // metric table validation
  non_square,
  too_few_states,
  negative_entry,
  nonzero_diagonal,
  zero_off_diagonal,
  asymmetric_metric,
  triangle_violation,
  // transition tensor validation
  row_sum_invalid,
  negative_probability,
  zero_probability_in_strict_mode,
  // block encoding
  path_too_short,
  index_out_of_range,
  // sequence space
  depth_mismatch,
  sequence_too_short,
  enumeration_budget_exceeded,
  // simulation
  initial_block_invalid,
  zero_row_encountered,
  // witness search and divergence
  window_too_large,
  threshold_above_diameter,
  length_mismatch,
  // random walk example
  invalid_walk_path,
  // command line / config
  usage_error,
  config_parse_error,
  // generic precondition breach not covered above
  invalid_argument,
};

inline const char* errc_name(errc code) {
  switch (code) {
    case errc::non_square: return "NonSquare";
    case errc::too_few_states: return "TooFewStates";
    case errc::negative_entry: return "NegativeEntry";
    case errc::nonzero_diagonal: return "NonzeroDiagonal";
    case errc::zero_off_diagonal: return "ZeroOffDiagonal";
    case errc::asymmetric_metric: return "AsymmetricMetric";
    case errc::triangle_violation: return "TriangleViolation";
    case errc::row_sum_invalid: return "RowSumInvalid";
    case errc::negative_probability: return "NegativeProbability";
    case errc::zero_probability_in_strict_mode: return "ZeroProbabilityInStrictMode";
    case errc::path_too_short: return "PathTooShort";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::depth_mismatch: return "DepthMismatch";
    case errc::sequence_too_short: return "SequenceTooShort";
    case errc::enumeration_budget_exceeded: return "EnumerationBudgetExceeded";
    case errc::initial_block_invalid: return "InitialBlockInvalid";
    case errc::zero_row_encountered: return "ZeroRowEncountered";
    case errc::window_too_large: return "WindowTooLarge";
    case errc::threshold_above_diameter: return "ThresholdAboveDiameter";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::invalid_walk_path: return "InvalidWalkPath";
    case errc::usage_error: return "UsageError";
    case errc::config_parse_error: return "ConfigParseError";
    case errc::invalid_argument: return "InvalidArgument";
  }
  return "UnknownError";
}

/// Exception carrying a machine-checkable code plus the offending indices
/// (row numbers, metric triples, path positions) where applicable.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message, std::vector<long long> indices = {})
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code),
        indices_(std::move(indices)) {}

  errc code() const noexcept { return code_; }
  const std::vector<long long>& indices() const noexcept { return indices_; }

 private:
  errc code_;
  std::vector<long long> indices_;
};

}  // namespace chainchaos
