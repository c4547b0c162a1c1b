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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "chainchaos/config.hpp"
#include "chainchaos/error.hpp"
#include "chainchaos/sequence_space.hpp"
#include "chainchaos/simulator.hpp"
#include "chainchaos/state_space.hpp"
#include "chainchaos/transition_model.hpp"

namespace chainchaos {

/**
 * Unpredictability witness: a shift zeta under which the first `window`
 * symbols of the path recur exactly, paired with the smallest admissible
 * divergence time eta at which the shifted path separates from the
 * original by at least epsilon0:
 *
 *   path[i + zeta] = path[i]          for all i in [0, window)
 *   d(path[zeta + eta], path[eta]) >= epsilon0
 *
 * A finite path can only ever provide evidence for unpredictability, never
 * a proof; the report states what was found at the given resolution.
 */
struct Witness {
  std::size_t zeta = 0;
  std::size_t eta = 0;
  std::size_t window = 0;
};

struct WitnessReport {
  double epsilon0 = 0.0;
  std::size_t window = 0;
  std::string realization_digest;
  std::vector<Witness> witnesses;
};

/**
 * Scans shifts zeta = 1, 2, ... in increasing order.  For each recurrent
 * shift the search for eta starts just above the previously recorded eta,
 * which enforces the strict increase of both coordinates across the report
 * (the finite stand-in for "both of which diverge to infinity").  A
 * recurrent shift with no admissible divergence before the end of the path
 * is skipped.  max_witnesses = 0 means unlimited.
 *
 * The set of recurrent shifts does not depend on epsilon0, only the eta
 * search does.  Under a two-letter discrete metric every threshold in
 * (0, 1] yields the identical report, because pairwise distances take no
 * values between 0 and 1.
 */
inline WitnessReport find_witnesses(const Realization& real, const StateSpace& space,
                                    std::size_t window, double epsilon0,
                                    std::size_t max_witnesses = 0) {
  const auto& path = real.path;
  const std::size_t n = path.size();
  if (window < 1) {
    throw Error(errc::invalid_argument, "window must be >= 1");
  }
  if (!(epsilon0 > 0.0)) {
    throw Error(errc::invalid_argument, "epsilon0 must be positive");
  }
  if (epsilon0 > space.diameter()) {
    throw Error(errc::threshold_above_diameter,
                "epsilon0 " + std::to_string(epsilon0) + " exceeds space diameter " +
                    std::to_string(space.diameter()));
  }
  if (2 * window > n) {
    throw Error(errc::window_too_large,
                "window " + std::to_string(window) + " needs path length >= " +
                    std::to_string(2 * window) + ", got " + std::to_string(n));
  }
  require_symbols_in_range(space, path, "path");

  WitnessReport report;
  report.epsilon0 = epsilon0;
  report.window = window;
  report.realization_digest = real.digest();
  std::size_t last_eta = 0;
  for (std::size_t zeta = 1; zeta + window <= n; ++zeta) {
    bool recurrent = true;
    for (std::size_t i = 0; i < window; ++i) {
      if (path[i + zeta] != path[i]) {
        recurrent = false;
        break;
      }
    }
    if (!recurrent) continue;
    for (std::size_t eta = last_eta + 1; zeta + eta < n; ++eta) {
      if (space.distance(path[zeta + eta], path[eta]) >= epsilon0) {
        report.witnesses.push_back(Witness{zeta, eta, window});
        last_eta = eta;
        break;
      }
    }
    if (max_witnesses != 0 && report.witnesses.size() >= max_witnesses) break;
  }
  return report;
}

/**
 * Occurrence census of every length-L word in a path, split by the model
 * into positive-probability words (all of which a long enough realization
 * must contain) and zero-probability words (which a supported path never
 * contains).  Words of length <= model order have no complete transition
 * window and count as positive.
 */
struct ArcCoverageReport {
  int word_length = 0;
  std::size_t total_words = 0;
  std::vector<char> appeared;  // indexed by word rank
  std::vector<char> positive;  // indexed by word rank
  std::size_t positive_words = 0;
  std::size_t appeared_positive = 0;
  std::vector<std::vector<int>> missing_positive;          // capped sample
  std::vector<std::vector<int>> appeared_zero_probability;  // capped sample
  std::size_t missing_positive_count = 0;
  std::size_t appeared_zero_probability_count = 0;

  bool positive_complete() const noexcept { return missing_positive_count == 0; }
  bool zero_clean() const noexcept { return appeared_zero_probability_count == 0; }
};

inline ArcCoverageReport arc_coverage(const Realization& real, const TransitionModel& model,
                                      int word_length,
                                      std::size_t budget = kDefaultEnumerationBudget) {
  const auto& path = real.path;
  if (word_length < 1) {
    throw Error(errc::invalid_argument, "word length must be >= 1");
  }
  if (path.size() < static_cast<std::size_t>(word_length)) {
    throw Error(errc::path_too_short,
                "path of length " + std::to_string(path.size()) +
                    " has no length-" + std::to_string(word_length) + " window");
  }
  const int m = model.num_states();
  for (std::size_t k = 0; k < path.size(); ++k) {
    if (path[k] < 0 || path[k] >= m) {
      throw Error(errc::index_out_of_range,
                  "path symbol " + std::to_string(path[k]) + " at position " +
                      std::to_string(k) + " outside 0.." + std::to_string(m - 1),
                  {static_cast<long long>(k)});
    }
  }
  const std::size_t words = checked_pow(static_cast<std::size_t>(m), word_length);
  if (words > budget) {
    throw Error(errc::enumeration_budget_exceeded,
                "word length " + std::to_string(word_length) + " enumerates " +
                    std::to_string(words) + " words, budget " + std::to_string(budget));
  }

  ArcCoverageReport report;
  report.word_length = word_length;
  report.total_words = words;
  report.appeared.assign(words, 0);
  report.positive.assign(words, 0);

  const auto L = static_cast<std::size_t>(word_length);
  for (std::size_t start = 0; start + L <= path.size(); ++start) {
    const std::vector<int> word(path.begin() + static_cast<std::ptrdiff_t>(start),
                                path.begin() + static_cast<std::ptrdiff_t>(start + L));
    report.appeared[word_index(word, m)] = 1;
  }

  const auto r = static_cast<std::size_t>(model.order());
  for (std::size_t w = 0; w < words; ++w) {
    const auto word = index_to_word(w, m, word_length);
    bool pos = true;
    for (std::size_t k = r; k < word.size() && pos; ++k) {
      const std::vector<int> cond(word.begin() + static_cast<std::ptrdiff_t>(k - r),
                                  word.begin() + static_cast<std::ptrdiff_t>(k));
      if (model.prob(word_index(cond, m), word[k]) == 0.0) pos = false;
    }
    report.positive[w] = pos ? 1 : 0;
    if (pos) {
      ++report.positive_words;
      if (report.appeared[w]) {
        ++report.appeared_positive;
      } else {
        ++report.missing_positive_count;
        if (report.missing_positive.size() < 64) {
          report.missing_positive.push_back(word);
        }
      }
    } else if (report.appeared[w]) {
      ++report.appeared_zero_probability_count;
      if (report.appeared_zero_probability.size() < 64) {
        report.appeared_zero_probability.push_back(word);
      }
    }
  }
  return report;
}

/**
 * Shortest linear word over 0..m-1 containing every length-n word exactly
 * once as a factor: a de Bruijn cycle of order n, generated with the
 * standard recursive necklace-concatenation construction, linearized by
 * appending the first n-1 symbols.  Length is m^n + n - 1.
 */
inline std::vector<int> de_bruijn_sequence(int m, int n,
                                           std::size_t budget = kDefaultEnumerationBudget) {
  if (m < 2 || n < 1) {
    throw Error(errc::invalid_argument, "need alphabet size >= 2 and order >= 1");
  }
  const std::size_t words = checked_pow(static_cast<std::size_t>(m), n);
  if (words > budget) {
    throw Error(errc::enumeration_budget_exceeded,
                "order " + std::to_string(n) + " needs " + std::to_string(words) +
                    " words, budget " + std::to_string(budget));
  }
  std::vector<int> a(static_cast<std::size_t>(m) * static_cast<std::size_t>(n), 0);
  std::vector<int> cycle;
  cycle.reserve(words);
  // Fredricksen-Kessler-Maiorana: concatenating the aperiodic prefixes of
  // Lyndon-word extensions in lexicographic order yields the cycle.
  auto db = [&](auto&& self, int t, int p) -> void {
    if (t > n) {
      if (n % p == 0) {
        for (int k = 1; k <= p; ++k) cycle.push_back(a[static_cast<std::size_t>(k)]);
      }
      return;
    }
    a[static_cast<std::size_t>(t)] = a[static_cast<std::size_t>(t - p)];
    self(self, t + 1, p);
    for (int j = a[static_cast<std::size_t>(t - p)] + 1; j < m; ++j) {
      a[static_cast<std::size_t>(t)] = j;
      self(self, t + 1, t);
    }
  };
  db(db, 1, 1);
  std::vector<int> linear = cycle;
  linear.insert(linear.end(), cycle.begin(), cycle.begin() + (n - 1));
  return linear;
}

/**
 * Finite-resolution certificate for the three Devaney ingredients of the
 * shift at depth n.  Each part is verified by construction plus an
 * explicit check, not assumed:
 *
 *  - periodic density: for every depth-n prefix w, the truncation of the
 *    periodic word w w w ... to depth K lies in w's cylinder and is a
 *    fixed point of the n-fold shift (prefix equality at depth K - n);
 *  - transitivity: one explicit word containing every depth-n word as a
 *    factor, a dense-orbit prefix at this resolution;
 *  - sensitivity: the separation constant epsilon0 of degree n.
 */
struct DevaneyCertificate {
  int depth = 0;
  int truncation_depth = 0;
  bool periodic_density_pass = false;
  bool transitivity_pass = false;
  std::vector<int> transitivity_witness;
  double sensitivity_constant = 0.0;
  SeparationCertificate separation;
};

inline DevaneyCertificate devaney_certificate(const StateSpace& space, int depth,
                                              int truncation_depth = kDefaultTruncationDepth,
                                              std::size_t budget = kDefaultEnumerationBudget) {
  const int m = space.size();
  if (depth < 1) {
    throw Error(errc::invalid_argument, "certificate depth must be >= 1");
  }
  if (truncation_depth <= depth || truncation_depth > kMaxTruncationDepth) {
    throw Error(errc::invalid_argument,
                "truncation depth " + std::to_string(truncation_depth) +
                    " must exceed certificate depth " + std::to_string(depth) +
                    " and stay within " + std::to_string(kMaxTruncationDepth));
  }
  const std::size_t words = checked_pow(static_cast<std::size_t>(m), depth);
  if (words > budget) {
    throw Error(errc::enumeration_budget_exceeded,
                "depth " + std::to_string(depth) + " enumerates " + std::to_string(words) +
                    " cylinders, budget " + std::to_string(budget));
  }

  DevaneyCertificate cert;
  cert.depth = depth;
  cert.truncation_depth = truncation_depth;

  const int K = truncation_depth;
  bool periodic_ok = true;
  for (std::size_t w = 0; w < words && periodic_ok; ++w) {
    const auto prefix = index_to_word(w, m, depth);
    SymbolSequence periodic;
    periodic.symbols.reserve(static_cast<std::size_t>(K));
    for (int k = 0; k < K; ++k) {
      periodic.symbols.push_back(prefix[static_cast<std::size_t>(k % depth)]);
    }
    if (!contains(Cylinder{prefix}, periodic)) periodic_ok = false;
    SymbolSequence image = periodic;
    for (int s = 0; s < depth; ++s) image = shift(image);
    for (int k = 0; k < K - depth; ++k) {
      if (image.symbols[static_cast<std::size_t>(k)] !=
          periodic.symbols[static_cast<std::size_t>(k)]) {
        periodic_ok = false;
        break;
      }
    }
  }
  cert.periodic_density_pass = periodic_ok;

  cert.transitivity_witness = de_bruijn_sequence(m, depth, budget);
  std::vector<char> seen(words, 0);
  std::size_t covered = 0;
  const auto& tw = cert.transitivity_witness;
  for (std::size_t start = 0; start + static_cast<std::size_t>(depth) <= tw.size();
       ++start) {
    const std::vector<int> word(tw.begin() + static_cast<std::ptrdiff_t>(start),
                                tw.begin() + static_cast<std::ptrdiff_t>(start) + depth);
    const std::size_t idx = word_index(word, m);
    if (!seen[idx]) {
      seen[idx] = 1;
      ++covered;
    }
  }
  cert.transitivity_pass =
      covered == words && tw.size() == words + static_cast<std::size_t>(depth) - 1;

  cert.separation = check_separation_condition(space, depth, budget);
  cert.sensitivity_constant = cert.separation.epsilon0;
  return cert;
}

/// Smallest index t with d(a_t, b_t) >= epsilon0, or nullopt when the two
/// paths never separate that far.
inline std::optional<std::size_t> divergence_locator(const Realization& a,
                                                     const Realization& b,
                                                     const StateSpace& space,
                                                     double epsilon0) {
  if (a.path.size() != b.path.size()) {
    throw Error(errc::length_mismatch,
                "paths have lengths " + std::to_string(a.path.size()) + " and " +
                    std::to_string(b.path.size()));
  }
  if (!(epsilon0 > 0.0)) {
    throw Error(errc::invalid_argument, "epsilon0 must be positive");
  }
  if (epsilon0 > space.diameter()) {
    throw Error(errc::threshold_above_diameter,
                "epsilon0 " + std::to_string(epsilon0) + " exceeds space diameter " +
                    std::to_string(space.diameter()));
  }
  require_symbols_in_range(space, a.path, "first path");
  require_symbols_in_range(space, b.path, "second path");
  for (std::size_t t = 0; t < a.path.size(); ++t) {
    if (space.distance(a.path[t], b.path[t]) >= epsilon0) return t;
  }
  return std::nullopt;
}

}  // namespace chainchaos
