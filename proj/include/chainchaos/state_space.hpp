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

#include <algorithm>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "chainchaos/error.hpp"

namespace chainchaos {

/**
 * Finite metric state space: m >= 2 labelled states with a full pairwise
 * distance table.  Construction validates the table, so every live instance
 * satisfies the metric axioms exactly (no tolerance): d(i,i) = 0,
 * d(i,j) > 0 for i != j, d(i,j) = d(j,i), and
 * d(i,k) <= d(i,j) + d(j,k) for all triples.
 *
 * Validation failures throw Error with the first offending indices in
 * row-major scan order, so callers get a deterministic report.
 */
class StateSpace {
 public:
  /// Validates `table` (m x m) and adopts it.  `labels` defaults to
  /// "s1".."sm" when empty, and must otherwise have one distinct non-empty
  /// label per state.
  StateSpace(const std::vector<std::vector<double>>& table,
             std::vector<std::string> labels = {})
      : labels_(std::move(labels)) {
    const std::size_t m = table.size();
    if (m < 2) {
      throw Error(errc::too_few_states,
                  "state space needs at least 2 states, got " + std::to_string(m));
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (table[i].size() != m) {
        throw Error(errc::non_square,
                    "metric row " + std::to_string(i) + " has " +
                        std::to_string(table[i].size()) + " entries, expected " +
                        std::to_string(m),
                    {static_cast<long long>(i)});
      }
    }
    // Axioms are checked in a fixed order (sign, diagonal, positivity,
    // symmetry, triangle) so the reported violation is reproducible.
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        const double v = table[i][j];
        if (!(v >= 0.0) || v > std::numeric_limits<double>::max()) {
          throw Error(errc::negative_entry,
                      "d(" + std::to_string(i) + "," + std::to_string(j) +
                          ") must be finite and >= 0",
                      {static_cast<long long>(i), static_cast<long long>(j)});
        }
      }
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (table[i][i] != 0.0) {
        throw Error(errc::nonzero_diagonal,
                    "d(" + std::to_string(i) + "," + std::to_string(i) + ") must be 0",
                    {static_cast<long long>(i), static_cast<long long>(i)});
      }
    }
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (i != j && table[i][j] == 0.0) {
          throw Error(errc::zero_off_diagonal,
                      "distinct states " + std::to_string(i) + "," + std::to_string(j) +
                          " must have positive distance",
                      {static_cast<long long>(i), static_cast<long long>(j)});
        }
      }
    }
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        if (table[i][j] != table[j][i]) {
          throw Error(errc::asymmetric_metric,
                      "d(" + std::to_string(i) + "," + std::to_string(j) +
                          ") != d(" + std::to_string(j) + "," + std::to_string(i) + ")",
                      {static_cast<long long>(i), static_cast<long long>(j)});
        }
      }
    }
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t k = 0; k < m; ++k) {
          if (table[i][k] > table[i][j] + table[j][k]) {
            throw Error(errc::triangle_violation,
                        "d(" + std::to_string(i) + "," + std::to_string(k) +
                            ") exceeds d(" + std::to_string(i) + "," + std::to_string(j) +
                            ") + d(" + std::to_string(j) + "," + std::to_string(k) + ")",
                        {static_cast<long long>(i), static_cast<long long>(j),
                         static_cast<long long>(k)});
          }
        }
      }
    }
    if (labels_.empty()) {
      labels_.reserve(m);
      for (std::size_t i = 0; i < m; ++i) labels_.push_back("s" + std::to_string(i + 1));
    }
    if (labels_.size() != m) {
      throw Error(errc::invalid_argument,
                  "got " + std::to_string(labels_.size()) + " labels for " +
                      std::to_string(m) + " states");
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (labels_[i].empty()) {
        throw Error(errc::invalid_argument, "label " + std::to_string(i) + " is empty",
                    {static_cast<long long>(i)});
      }
      for (std::size_t j = i + 1; j < m; ++j) {
        if (labels_[i] == labels_[j]) {
          throw Error(errc::invalid_argument, "duplicate label '" + labels_[i] + "'",
                      {static_cast<long long>(i), static_cast<long long>(j)});
        }
      }
    }
    metric_.reserve(m * m);
    for (const auto& row : table) metric_.insert(metric_.end(), row.begin(), row.end());
    diameter_ = *std::max_element(metric_.begin(), metric_.end());
  }

  /// Discrete metric space on m states: d(i,j) = 1 for i != j.
  static StateSpace discrete(int m, std::vector<std::string> labels = {}) {
    if (m < 2) {
      throw Error(errc::too_few_states,
                  "state space needs at least 2 states, got " + std::to_string(m));
    }
    const auto n = static_cast<std::size_t>(m);
    std::vector<std::vector<double>> table(n, std::vector<double>(n, 1.0));
    for (std::size_t i = 0; i < n; ++i) table[i][i] = 0.0;
    return StateSpace(table, std::move(labels));
  }

  int size() const noexcept { return static_cast<int>(labels_.size()); }

  /// Unchecked lookup; callers validate symbol ranges before tight loops.
  double distance(int i, int j) const {
    return metric_[static_cast<std::size_t>(i) * labels_.size() +
                   static_cast<std::size_t>(j)];
  }

  /// Largest pairwise distance, cached at construction.  Strictly positive.
  double diameter() const noexcept { return diameter_; }

  const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::optional<int> index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i] == label) return static_cast<int>(i);
    }
    return std::nullopt;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<double> metric_;  // row-major m x m
  double diameter_ = 0.0;
};

/// Validating constructor as a free function, for call sites that read
/// better with an explicit verb.
inline StateSpace validate_metric(const std::vector<std::vector<double>>& table,
                                  std::vector<std::string> labels = {}) {
  return StateSpace(table, std::move(labels));
}

/// Smallest distance between two distinct states.  Positive by the axioms.
inline double min_pairwise_distance(const StateSpace& space) {
  double best = space.diameter();
  for (int i = 0; i < space.size(); ++i) {
    for (int j = 0; j < space.size(); ++j) {
      if (i != j) best = std::min(best, space.distance(i, j));
    }
  }
  return best;
}

/// Throws IndexOutOfRange unless every entry of `symbols` names a state.
inline void require_symbols_in_range(const StateSpace& space,
                                     const std::vector<int>& symbols,
                                     const char* what) {
  for (std::size_t k = 0; k < symbols.size(); ++k) {
    if (symbols[k] < 0 || symbols[k] >= space.size()) {
      throw Error(errc::index_out_of_range,
                  std::string(what) + " symbol " + std::to_string(symbols[k]) +
                      " at position " + std::to_string(k) + " is outside 0.." +
                      std::to_string(space.size() - 1),
                  {static_cast<long long>(k)});
    }
  }
}

}  // namespace chainchaos
