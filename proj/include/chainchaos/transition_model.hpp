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

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "chainchaos/config.hpp"
#include "chainchaos/digest.hpp"
#include "chainchaos/error.hpp"

namespace chainchaos {

/// base^exp with overflow detection; throws EnumerationBudgetExceeded when
/// the result would not fit in size_t.  Used to size word tables.
inline std::size_t checked_pow(std::size_t base, int exp) {
  std::size_t result = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && result > (std::size_t{0} - 1) / base) {
      throw Error(errc::enumeration_budget_exceeded,
                  std::to_string(base) + "^" + std::to_string(exp) + " overflows");
    }
    result *= base;
  }
  return result;
}

/// Rank of a word over the alphabet 0..m-1, first symbol most significant:
/// index(a_1..a_r) = sum a_k * m^(r-k).  Inverse of index_to_word.
inline std::size_t word_index(const std::vector<int>& word, int m) {
  std::size_t idx = 0;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (word[k] < 0 || word[k] >= m) {
      throw Error(errc::index_out_of_range,
                  "word symbol " + std::to_string(word[k]) + " outside 0.." +
                      std::to_string(m - 1),
                  {static_cast<long long>(k)});
    }
    idx = idx * static_cast<std::size_t>(m) + static_cast<std::size_t>(word[k]);
  }
  return idx;
}

inline std::vector<int> index_to_word(std::size_t index, int m, int length) {
  std::vector<int> word(static_cast<std::size_t>(length));
  for (int k = length - 1; k >= 0; --k) {
    word[static_cast<std::size_t>(k)] =
        static_cast<int>(index % static_cast<std::size_t>(m));
    index /= static_cast<std::size_t>(m);
  }
  if (index != 0) {
    throw Error(errc::index_out_of_range,
                "word index does not fit in " + std::to_string(length) + " symbols");
  }
  return word;
}

/**
 * Order-r transition model over m states: a row-stochastic tensor with one
 * row per conditioning word (a_1..a_r) and one column per successor state.
 * Order r = 1 is an ordinary transition matrix.  Rows are indexed by
 * word_index of the conditioning word.
 *
 * Construction validates exactly once; every instance satisfies:
 * entries in [0,1], each row sum within kRowSumTolerance of 1, and (in
 * strict mode) every entry positive.
 */
class TransitionModel {
 public:
  TransitionModel(const std::vector<std::vector<double>>& tensor, int num_states,
                  int order, bool strict = false)
      : num_states_(num_states), order_(order), strict_(strict) {
    if (num_states < 2) {
      throw Error(errc::too_few_states,
                  "transition model needs at least 2 states, got " +
                      std::to_string(num_states));
    }
    if (order < 1) {
      throw Error(errc::invalid_argument,
                  "order must be >= 1, got " + std::to_string(order));
    }
    const std::size_t rows = checked_pow(static_cast<std::size_t>(num_states), order);
    if (tensor.size() != rows) {
      throw Error(errc::invalid_argument,
                  "expected " + std::to_string(rows) + " rows for order " +
                      std::to_string(order) + " over " + std::to_string(num_states) +
                      " states, got " + std::to_string(tensor.size()));
    }
    probs_.reserve(rows * static_cast<std::size_t>(num_states));
    for (std::size_t w = 0; w < rows; ++w) {
      const auto& row = tensor[w];
      if (row.size() != static_cast<std::size_t>(num_states)) {
        throw Error(errc::invalid_argument,
                    "row " + std::to_string(w) + " has " + std::to_string(row.size()) +
                        " entries, expected " + std::to_string(num_states),
                    {static_cast<long long>(w)});
      }
      double sum = 0.0;
      for (std::size_t j = 0; j < row.size(); ++j) {
        const double p = row[j];
        if (!(p >= 0.0) || p > 1.0) {
          throw Error(errc::negative_probability,
                      "p(row " + std::to_string(w) + ", col " + std::to_string(j) +
                          ") must lie in [0,1]",
                      {static_cast<long long>(w), static_cast<long long>(j)});
        }
        if (strict && p == 0.0) {
          throw Error(errc::zero_probability_in_strict_mode,
                      "p(row " + std::to_string(w) + ", col " + std::to_string(j) +
                          ") is 0 but strict positivity was requested",
                      {static_cast<long long>(w), static_cast<long long>(j)});
        }
        sum += p;
      }
      if (std::abs(sum - 1.0) > kRowSumTolerance) {
        throw Error(errc::row_sum_invalid,
                    "row " + std::to_string(w) + " sums to " + std::to_string(sum),
                    {static_cast<long long>(w)});
      }
      probs_.insert(probs_.end(), row.begin(), row.end());
    }
  }

  int num_states() const noexcept { return num_states_; }
  int order() const noexcept { return order_; }
  bool strict() const noexcept { return strict_; }

  /// Number of conditioning words, m^order.
  std::size_t num_words() const noexcept {
    return probs_.size() / static_cast<std::size_t>(num_states_);
  }

  double prob(std::size_t word, int next) const {
    return probs_[word * static_cast<std::size_t>(num_states_) +
                  static_cast<std::size_t>(next)];
  }

  const double* row(std::size_t word) const {
    return probs_.data() + word * static_cast<std::size_t>(num_states_);
  }

  /// Content digest over shape and exact entry bit patterns.
  std::string digest() const {
    Digest d;
    d.update_u64(static_cast<std::uint64_t>(num_states_));
    d.update_u64(static_cast<std::uint64_t>(order_));
    for (double p : probs_) d.update_double(p);
    return d.hex();
  }

 private:
  int num_states_;
  int order_;
  bool strict_;
  std::vector<double> probs_;  // row-major, num_words x num_states
};

/// Validating constructor as a free function.
inline TransitionModel validate_stochastic(const std::vector<std::vector<double>>& tensor,
                                           int num_states, int order,
                                           bool strict = false) {
  return TransitionModel(tensor, num_states, order, strict);
}

/**
 * Equivalent first-order chain over block states.  Block state w encodes a
 * word (a_1..a_r); from w the chain may move only to blocks w' whose first
 * r-1 symbols equal the last r-1 symbols of w (the windows overlap), and
 * the probability of that move is the original tensor entry for appending
 * w's successor symbol.  All other block transitions get probability 0, so
 * the lifted matrix is never strict.
 *
 * For order 1 this returns a copy of the input.
 */
inline TransitionModel lift_to_first_order(const TransitionModel& model) {
  const auto m = static_cast<std::size_t>(model.num_states());
  const std::size_t words = model.num_words();
  if (words > kDefaultEnumerationBudget) {
    throw Error(errc::enumeration_budget_exceeded,
                "lifting would enumerate " + std::to_string(words) + " block states");
  }
  const std::size_t tail_base = words / m;  // m^(r-1)
  std::vector<std::vector<double>> lifted(words, std::vector<double>(words, 0.0));
  for (std::size_t w = 0; w < words; ++w) {
    for (std::size_t j = 0; j < m; ++j) {
      // Successor block drops the leading symbol and appends j.
      const std::size_t dest = (w % tail_base) * m + j;
      lifted[w][dest] = model.prob(w, static_cast<int>(j));
    }
  }
  return TransitionModel(lifted, static_cast<int>(words), 1, false);
}

/// Overlapping block of r+1 consecutive path symbols: the conditioning word
/// plus the realized successor.  Adjacent blocks share r symbols.
struct BlockEvent {
  std::vector<int> symbols;

  friend bool operator==(const BlockEvent& a, const BlockEvent& b) {
    return a.symbols == b.symbols;
  }
};

/// Sliding-window block encoding of a path under an order-r model: block k
/// is path[k..k+r], for k = 0..len-r-1.  Requires at least r+1 symbols.
/// The overlap invariant (last r symbols of block k equal the first r of
/// block k+1) holds by construction and is what decoding relies on.
inline std::vector<BlockEvent> block_encode(const std::vector<int>& path, int order) {
  if (order < 1) {
    throw Error(errc::invalid_argument, "order must be >= 1");
  }
  const auto width = static_cast<std::size_t>(order) + 1;
  if (path.size() < width) {
    throw Error(errc::path_too_short,
                "need at least " + std::to_string(width) + " symbols, got " +
                    std::to_string(path.size()));
  }
  std::vector<BlockEvent> blocks;
  blocks.reserve(path.size() - width + 1);
  for (std::size_t k = 0; k + width <= path.size(); ++k) {
    blocks.push_back(BlockEvent{
        std::vector<int>(path.begin() + static_cast<std::ptrdiff_t>(k),
                         path.begin() + static_cast<std::ptrdiff_t>(k + width))});
  }
  return blocks;
}

/// Fixed coordinate of every block, 1-based: coordinate 1 of the block
/// sequence recovers the path prefix path[0..len-r-1].
inline std::vector<int> subsequence_projection(const std::vector<BlockEvent>& blocks,
                                               int coordinate) {
  if (blocks.empty()) {
    throw Error(errc::invalid_argument, "block sequence is empty");
  }
  const auto width = blocks.front().symbols.size();
  if (coordinate < 1 || static_cast<std::size_t>(coordinate) > width) {
    throw Error(errc::index_out_of_range,
                "coordinate " + std::to_string(coordinate) + " outside 1.." +
                    std::to_string(width));
  }
  std::vector<int> out;
  out.reserve(blocks.size());
  for (const auto& b : blocks) {
    out.push_back(b.symbols[static_cast<std::size_t>(coordinate - 1)]);
  }
  return out;
}

/// Probability of the path conditioned on its first `order` symbols: the
/// product of tensor entries along every sliding window.  A path with no
/// complete transition (length == order) has probability 1 by convention.
inline double path_probability(const TransitionModel& model,
                               const std::vector<int>& path) {
  const auto r = static_cast<std::size_t>(model.order());
  if (path.size() < r) {
    throw Error(errc::path_too_short,
                "need at least " + std::to_string(r) + " symbols, got " +
                    std::to_string(path.size()));
  }
  for (std::size_t k = 0; k < path.size(); ++k) {
    if (path[k] < 0 || path[k] >= model.num_states()) {
      throw Error(errc::index_out_of_range,
                  "path symbol " + std::to_string(path[k]) + " at position " +
                      std::to_string(k) + " outside 0.." +
                      std::to_string(model.num_states() - 1),
                  {static_cast<long long>(k)});
    }
  }
  double p = 1.0;
  for (std::size_t k = r; k < path.size(); ++k) {
    const std::vector<int> word(path.begin() + static_cast<std::ptrdiff_t>(k - r),
                                path.begin() + static_cast<std::ptrdiff_t>(k));
    p *= model.prob(word_index(word, model.num_states()), path[k]);
  }
  return p;
}

}  // namespace chainchaos
