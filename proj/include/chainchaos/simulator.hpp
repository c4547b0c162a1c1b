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
#include <optional>
#include <string>
#include <vector>

#include "chainchaos/digest.hpp"
#include "chainchaos/error.hpp"
#include "chainchaos/prng.hpp"
#include "chainchaos/transition_model.hpp"

namespace chainchaos {

/// One seeded sample path.  Paths produced by simulate never contain a
/// zero-probability transition; externally loaded paths carry no such
/// guarantee and can be screened with verify_support.
struct Realization {
  std::vector<int> path;
  std::uint64_t seed = 0;
  std::string model_digest;
  std::vector<int> initial;

  /// Content digest tying the path to its provenance fields.
  std::string digest() const {
    Digest d;
    d.update_string(model_digest);
    d.update_u64(seed);
    d.update_u64(initial.size());
    for (int s : initial) d.update_i64(s);
    d.update_u64(path.size());
    for (int s : path) d.update_i64(s);
    return d.hex();
  }
};

namespace detail {

/// Inverse-transform draw from a conditional row: cumulative sums in
/// declared state order, returning the smallest j with u < c_j.  A draw
/// landing exactly on a boundary c_j therefore selects index j+1 or later
/// (ties go up), and zero-probability states can never be selected because
/// their cumulative interval is empty.  The fallback for u beyond the last
/// cumulative sum (possible when a row sums to slightly below 1) is the
/// last positive-probability state.
inline int sample_row(const double* row, int m, double u) {
  double c = 0.0;
  for (int j = 0; j < m; ++j) {
    c += row[j];
    if (u < c) return j;
  }
  for (int j = m - 1; j >= 0; --j) {
    if (row[j] > 0.0) return j;
  }
  throw Error(errc::zero_row_encountered, "conditional row has no positive entry");
}

}  // namespace detail

/**
 * Seeded realization of length N.  The path starts with the initial block
 * (length = model order) and each subsequent state is drawn from the row
 * conditioned on the trailing block, consuming exactly one uniform draw
 * per step from a SplitMix64 stream seeded with `seed`.  Identical
 * (model, initial, N, seed) yield bit-identical paths on any platform.
 */
inline Realization simulate(const TransitionModel& model, const std::vector<int>& initial,
                            std::size_t length, std::uint64_t seed) {
  const auto r = static_cast<std::size_t>(model.order());
  if (initial.size() != r) {
    throw Error(errc::initial_block_invalid,
                "initial block has " + std::to_string(initial.size()) +
                    " symbols, model order is " + std::to_string(r));
  }
  for (std::size_t k = 0; k < initial.size(); ++k) {
    if (initial[k] < 0 || initial[k] >= model.num_states()) {
      throw Error(errc::initial_block_invalid,
                  "initial symbol " + std::to_string(initial[k]) + " outside 0.." +
                      std::to_string(model.num_states() - 1),
                  {static_cast<long long>(k)});
    }
  }
  if (length < r || length < 1) {
    throw Error(errc::invalid_argument,
                "length " + std::to_string(length) + " cannot hold the order-" +
                    std::to_string(r) + " initial block");
  }
  Realization real;
  real.seed = seed;
  real.model_digest = model.digest();
  real.initial = initial;
  real.path = initial;
  real.path.reserve(length);
  SplitMix64 rng(seed);
  const int m = model.num_states();
  while (real.path.size() < length) {
    const std::vector<int> word(real.path.end() - static_cast<std::ptrdiff_t>(r),
                                real.path.end());
    const std::size_t w = word_index(word, m);
    real.path.push_back(detail::sample_row(model.row(w), m, rng.next_double()));
  }
  return real;
}

/// Uniform draw over the m^r valid starting blocks, deterministic in seed.
inline std::vector<int> random_initial(const TransitionModel& model, std::uint64_t seed) {
  const std::size_t words = model.num_words();
  SplitMix64 rng(seed);
  auto idx = static_cast<std::size_t>(rng.next_double() * static_cast<double>(words));
  if (idx >= words) idx = words - 1;
  return index_to_word(idx, model.num_states(), model.order());
}

/// Wraps an externally supplied path (for example one read back from CSV)
/// so analysis code sees the same Realization shape.
inline Realization external_realization(std::vector<int> path, int order = 1,
                                        std::uint64_t seed = 0) {
  if (path.empty() || static_cast<std::size_t>(order) > path.size()) {
    throw Error(errc::path_too_short,
                "external path of length " + std::to_string(path.size()) +
                    " cannot carry an order-" + std::to_string(order) + " block");
  }
  Realization real;
  real.seed = seed;
  real.model_digest = "external";
  real.initial = std::vector<int>(path.begin(), path.begin() + order);
  real.path = std::move(path);
  return real;
}

/// Index of the first sliding (order+1)-window with zero probability under
/// the model, or nullopt when the whole path is supported.  simulate output
/// always returns nullopt; external paths may not.
inline std::optional<std::size_t> verify_support(const TransitionModel& model,
                                                 const std::vector<int>& path) {
  const auto r = static_cast<std::size_t>(model.order());
  if (path.size() < r + 1) return std::nullopt;
  for (std::size_t k = r; k < path.size(); ++k) {
    const std::vector<int> word(path.begin() + static_cast<std::ptrdiff_t>(k - r),
                                path.begin() + static_cast<std::ptrdiff_t>(k));
    if (model.prob(word_index(word, model.num_states()), path[k]) == 0.0) {
      return k - r;
    }
  }
  return std::nullopt;
}

}  // namespace chainchaos
