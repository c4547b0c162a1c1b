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

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "chainchaos/error.hpp"
#include "chainchaos/simulator.hpp"
#include "chainchaos/state_space.hpp"
#include "chainchaos/transition_model.hpp"

namespace chainchaos {

/**
 * Bundled reflecting random walk on the four levels 1..4: a fair +-1 step
 * in the interior, forced moves 1 -> 2 and 4 -> 3 at the boundaries.  The
 * walk has two coupled views:
 *
 *  - the raw chain over levels 1..4 (indices 0..3), metric = absolute
 *    level difference, used for plotting and divergence experiments;
 *  - the event-coded chain over two symbols (indices 0, 1 labelled
 *    "s1", "s2"), discrete metric, in which a boundary excursion
 *    2 -> 1 -> 2 collapses to the symbol pair (s1, s1) and 3 -> 4 -> 3 to
 *    (s2, s2), while direct interior moves map to (s1, s2) / (s2, s1).
 *
 * Every event probability is 1/2, so the coded chain is the fair coin over
 * {s1, s2}; that is the chain whose realizations feed the witness search.
 */
struct WalkChain {
  StateSpace raw_space;
  TransitionModel raw_model;
  StateSpace event_space;
  TransitionModel event_model;
};

/// Number of levels in the walk; raw state index i carries level i + 1.
inline constexpr int kWalkLevels = 4;

/// Repository seed pinning all committed walk artifacts.
inline constexpr std::uint64_t kWalkSeed = 42;

inline WalkChain build_walk_chain() {
  std::vector<std::vector<double>> raw_metric(kWalkLevels,
                                              std::vector<double>(kWalkLevels, 0.0));
  for (int i = 0; i < kWalkLevels; ++i) {
    for (int j = 0; j < kWalkLevels; ++j) {
      raw_metric[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          std::abs(i - j);
    }
  }
  const std::vector<std::vector<double>> raw_rows = {
      {0.0, 1.0, 0.0, 0.0},
      {0.5, 0.0, 0.5, 0.0},
      {0.0, 0.5, 0.0, 0.5},
      {0.0, 0.0, 1.0, 0.0},
  };
  const std::vector<std::vector<double>> event_rows = {
      {0.5, 0.5},
      {0.5, 0.5},
  };
  return WalkChain{
      StateSpace(raw_metric, {"1", "2", "3", "4"}),
      TransitionModel(raw_rows, kWalkLevels, 1, false),
      StateSpace::discrete(2, {"s1", "s2"}),
      TransitionModel(event_rows, 2, 1, true),
  };
}

/// Throws InvalidWalkPath unless `raw` is a legal walk: starts at an
/// interior level, stays within the four levels, and moves by exactly one
/// level per step (boundary reflections follow from that automatically).
inline void require_valid_walk(const std::vector<int>& raw) {
  if (raw.empty()) {
    throw Error(errc::invalid_walk_path, "walk path is empty");
  }
  if (raw.front() != 1 && raw.front() != 2) {
    throw Error(errc::invalid_walk_path,
                "walk must start at an interior level (2 or 3), got level " +
                    std::to_string(raw.front() + 1),
                {0});
  }
  for (std::size_t k = 0; k < raw.size(); ++k) {
    if (raw[k] < 0 || raw[k] >= kWalkLevels) {
      throw Error(errc::invalid_walk_path,
                  "level index " + std::to_string(raw[k]) + " at position " +
                      std::to_string(k) + " outside the four levels",
                  {static_cast<long long>(k)});
    }
    if (k > 0 && std::abs(raw[k] - raw[k - 1]) != 1) {
      throw Error(errc::invalid_walk_path,
                  "step from level " + std::to_string(raw[k - 1] + 1) + " to level " +
                      std::to_string(raw[k] + 1) + " at position " + std::to_string(k) +
                      " is not a unit move",
                  {static_cast<long long>(k)});
    }
  }
}

/**
 * Event coding of a raw walk: boundary levels are absorbed into the
 * excursion events, so the output keeps exactly the interior visits,
 * mapped 2 -> s1 (index 0) and 3 -> s2 (index 1).  An excursion 2,1,2 thus
 * becomes the repeated symbol pair s1,s1 and 3,4,3 becomes s2,s2, while
 * direct moves produce alternating symbols.  Decoding and re-encoding is
 * the identity; encoding then decoding recovers the walk up to a dropped
 * trailing boundary visit.
 */
inline std::vector<int> encode_walk_to_events(const std::vector<int>& raw) {
  require_valid_walk(raw);
  std::vector<int> events;
  events.reserve(raw.size());
  for (int level : raw) {
    if (level == 1 || level == 2) events.push_back(level - 1);
  }
  return events;
}

/// Inverse of the event coding: re-inserts the boundary visit implied by
/// every repeated symbol.  Output starts at the interior level matching
/// the first symbol.
inline std::vector<int> decode_events_to_walk(const std::vector<int>& events) {
  if (events.empty()) {
    throw Error(errc::invalid_walk_path, "event sequence is empty");
  }
  for (std::size_t k = 0; k < events.size(); ++k) {
    if (events[k] != 0 && events[k] != 1) {
      throw Error(errc::invalid_walk_path,
                  "event symbol " + std::to_string(events[k]) + " at position " +
                      std::to_string(k) + " is not s1/s2",
                  {static_cast<long long>(k)});
    }
  }
  std::vector<int> raw;
  raw.reserve(2 * events.size());
  raw.push_back(events.front() + 1);
  for (std::size_t k = 1; k < events.size(); ++k) {
    if (events[k] == events[k - 1]) {
      raw.push_back(events[k] == 0 ? 0 : 3);  // the absorbed boundary visit
    }
    raw.push_back(events[k] + 1);
  }
  return raw;
}

/// Plot window for the step-function export.  levels maps raw state index
/// to the plotted value.
struct WalkConfig {
  double horizon = 60.0;
  double dt = 0.1;
  std::array<int, 4> levels{1, 2, 3, 4};
};

/// Piecewise-constant trace: value values[n] holds on [times[n], times[n+1]).
struct StepTrace {
  std::vector<double> times;
  std::vector<int> values;
};

/**
 * Breakpoint list {(n * dt, level of path[n])} for n = 0..horizon/dt.  The
 * step count is resolved by rounding horizon/dt and demanding the product
 * reproduces the horizon to within 1e-9, which sidesteps the usual
 * floating-point floor hazard (60/0.1 lands just below 600).
 */
inline StepTrace step_function_export(const Realization& real, const WalkConfig& config) {
  if (!(config.dt > 0.0) || !(config.horizon > 0.0)) {
    throw Error(errc::invalid_argument, "horizon and dt must be positive");
  }
  const auto steps = static_cast<std::size_t>(std::llround(config.horizon / config.dt));
  if (steps < 1 ||
      std::abs(static_cast<double>(steps) * config.dt - config.horizon) > 1e-9) {
    throw Error(errc::invalid_argument, "horizon must be a positive multiple of dt");
  }
  if (real.path.size() < steps + 1) {
    throw Error(errc::path_too_short,
                "need " + std::to_string(steps + 1) + " path entries for " +
                    std::to_string(steps) + " intervals, got " +
                    std::to_string(real.path.size()));
  }
  StepTrace trace;
  trace.times.reserve(steps + 1);
  trace.values.reserve(steps + 1);
  for (std::size_t n = 0; n <= steps; ++n) {
    const int s = real.path[n];
    if (s < 0 || s >= kWalkLevels) {
      throw Error(errc::index_out_of_range,
                  "path symbol " + std::to_string(s) + " at position " +
                      std::to_string(n) + " is not a walk level",
                  {static_cast<long long>(n)});
    }
    trace.times.push_back(static_cast<double>(n) * config.dt);
    trace.values.push_back(config.levels[static_cast<std::size_t>(s)]);
  }
  return trace;
}

}  // namespace chainchaos
