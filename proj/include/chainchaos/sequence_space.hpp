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
#include <cstddef>
#include <string>
#include <vector>

#include "chainchaos/config.hpp"
#include "chainchaos/error.hpp"
#include "chainchaos/state_space.hpp"
#include "chainchaos/transition_model.hpp"

namespace chainchaos {

/**
 * The sequence space: one-sided infinite symbol sequences carrying the
 * weighted metric
 *
 *   delta(a, b) = sum_{k>=1} d(a_k, b_k) / 2^k.
 *
 * Infinite sequences are represented by finite truncations of depth K plus
 * a rigorous tail bound diam * 2^-K, so every reported distance is an
 * interval [value, value + tail] containing the true one.  The left shift
 * acts as the similarity map: shifting a depth-n cylinder n times yields
 * the whole space, which is what the coverage checker certifies at finite
 * resolution.
 */

/// Finite truncation of a point of the sequence space.
struct SymbolSequence {
  std::vector<int> symbols;

  int depth() const noexcept { return static_cast<int>(symbols.size()); }
};

/// All sequences sharing a fixed prefix.  Depth 0 is the whole space.
struct Cylinder {
  std::vector<int> prefix;

  int depth() const noexcept { return static_cast<int>(prefix.size()); }
};

inline void require_valid_sequence(const StateSpace& space, const SymbolSequence& seq,
                                   const char* what) {
  if (seq.symbols.empty() || seq.depth() > kMaxTruncationDepth) {
    throw Error(errc::invalid_argument,
                std::string(what) + " depth " + std::to_string(seq.depth()) +
                    " outside 1.." + std::to_string(kMaxTruncationDepth));
  }
  require_symbols_in_range(space, seq.symbols, what);
}

inline void require_valid_cylinder(const StateSpace& space, const Cylinder& cyl) {
  if (cyl.depth() > kMaxTruncationDepth) {
    throw Error(errc::invalid_argument,
                "cylinder depth " + std::to_string(cyl.depth()) + " exceeds " +
                    std::to_string(kMaxTruncationDepth));
  }
  require_symbols_in_range(space, cyl.prefix, "cylinder");
}

/// Truncated distance plus the rigorous bound on what truncation discarded.
struct DeltaDistance {
  double value = 0.0;
  double tail_bound = 0.0;

  /// Upper end of the interval containing the true infinite-sum distance.
  double upper() const noexcept { return value + tail_bound; }
};

/// Truncated delta over two equal-depth sequences.  Terms are accumulated
/// in ascending k so the floating-point result is reproducible.
inline DeltaDistance delta_metric(const SymbolSequence& a, const SymbolSequence& b,
                                  const StateSpace& space) {
  if (a.depth() != b.depth()) {
    throw Error(errc::depth_mismatch,
                "depths " + std::to_string(a.depth()) + " and " +
                    std::to_string(b.depth()) + " differ");
  }
  require_valid_sequence(space, a, "left sequence");
  require_valid_sequence(space, b, "right sequence");
  double sum = 0.0;
  double weight = 0.5;
  for (std::size_t k = 0; k < a.symbols.size(); ++k) {
    sum += space.distance(a.symbols[k], b.symbols[k]) * weight;
    weight *= 0.5;
  }
  return DeltaDistance{sum, space.diameter() * std::ldexp(1.0, -a.depth())};
}

/// True when the interval around delta(a, b) lies entirely below eps; the
/// rigorous closeness test for truncated points (recurrence of points of
/// the sequence space is phrased through this, while recurrence of raw
/// state sequences uses exact symbol equality).
inline bool delta_within(const SymbolSequence& a, const SymbolSequence& b,
                         const StateSpace& space, double eps) {
  return delta_metric(a, b, space).upper() < eps;
}

/// The similarity map: drop the leading symbol.  Output depth is K - 1.
inline SymbolSequence shift(const SymbolSequence& seq) {
  if (seq.depth() < 2) {
    throw Error(errc::sequence_too_short,
                "shift needs depth >= 2, got " + std::to_string(seq.depth()));
  }
  return SymbolSequence{std::vector<int>(seq.symbols.begin() + 1, seq.symbols.end())};
}

inline bool contains(const Cylinder& cyl, const SymbolSequence& seq) {
  if (seq.depth() < cyl.depth()) {
    throw Error(errc::depth_mismatch,
                "sequence depth " + std::to_string(seq.depth()) +
                    " below cylinder depth " + std::to_string(cyl.depth()));
  }
  for (std::size_t k = 0; k < cyl.prefix.size(); ++k) {
    if (seq.symbols[k] != cyl.prefix[k]) return false;
  }
  return true;
}

/**
 * Diameter of a depth-n cylinder at truncation depth K:
 *
 *   max delta = sum_{k=n+1..K} diam / 2^k = diam * (2^-n - 2^-K).
 *
 * The maximum is attained by any suffix pair realizing diam at every free
 * position, so the closed form is exact and shared by all prefixes of the
 * same depth; tests compare it against brute-force enumeration.
 */
inline double cylinder_diameter(const Cylinder& cyl, const StateSpace& space, int K) {
  require_valid_cylinder(space, cyl);
  if (K < cyl.depth() || K > kMaxTruncationDepth) {
    throw Error(errc::invalid_argument,
                "truncation depth " + std::to_string(K) + " outside " +
                    std::to_string(cyl.depth()) + ".." +
                    std::to_string(kMaxTruncationDepth));
  }
  return space.diameter() * (std::ldexp(1.0, -cyl.depth()) - std::ldexp(1.0, -K));
}

/// K -> infinity limit of the cylinder diameter, diam * 2^-n.
inline double cylinder_diameter_limit(const Cylinder& cyl, const StateSpace& space) {
  require_valid_cylinder(space, cyl);
  return space.diameter() * std::ldexp(1.0, -cyl.depth());
}

/**
 * Decay report for the maximal cylinder diameter per depth.  truncated_max
 * carries the depth-K values, limit_max the K -> infinity values; entry
 * [n-1] belongs to depth n.  All depth-n cylinders share one diameter, so
 * the per-depth maximum is that common value.
 *
 * pass requires, computed from the numbers rather than assumed: positive
 * maxima, strict decrease of the truncated series, and consecutive limit
 * maxima in exact ratio 1/2 (exact because halving a binary float is
 * lossless; the truncated series carries the additive tail 2^-K and its
 * ratios only approach 1/2).
 */
struct DiameterReport {
  int truncation_depth = 0;
  std::vector<double> truncated_max;
  std::vector<double> limit_max;
  bool pass = false;
};

inline DiameterReport check_diameter_condition(const StateSpace& space, int n_max,
                                               int K = kDefaultTruncationDepth) {
  if (n_max < 1 || n_max >= K || K > kMaxTruncationDepth) {
    throw Error(errc::invalid_argument,
                "need 1 <= n_max < K <= " + std::to_string(kMaxTruncationDepth) +
                    ", got n_max " + std::to_string(n_max) + ", K " + std::to_string(K));
  }
  DiameterReport report;
  report.truncation_depth = K;
  // A canonical prefix stands in for all of them; prefix content does not
  // enter the closed form.
  for (int n = 1; n <= n_max; ++n) {
    const Cylinder cyl{std::vector<int>(static_cast<std::size_t>(n), 0)};
    report.truncated_max.push_back(cylinder_diameter(cyl, space, K));
    report.limit_max.push_back(cylinder_diameter_limit(cyl, space));
  }
  bool ok = true;
  for (int n = 0; n < n_max; ++n) {
    const auto i = static_cast<std::size_t>(n);
    if (!(report.truncated_max[i] > 0.0) || !(report.limit_max[i] > 0.0)) ok = false;
    if (report.truncated_max[i] >= report.limit_max[i]) ok = false;
    if (n > 0) {
      if (report.truncated_max[i] >= report.truncated_max[i - 1]) ok = false;
      if (report.limit_max[i] != 0.5 * report.limit_max[i - 1]) ok = false;
    }
  }
  report.pass = ok;
  return report;
}

/**
 * Separation certificate of degree n: every depth-n cylinder sits at
 * distance >= epsilon0 from its nearest distinct cylinder, and epsilon0 is
 * the largest constant with that property (the minimal pairwise cylinder
 * distance).  Cylinder distance is the inf of delta over sequence pairs,
 * attained in closed form by matching suffixes:
 *
 *   dist(w, v) = sum_{k=1..n} d(w_k, v_k) / 2^k.
 *
 * Witnesses are the per-prefix nearest neighbours, lexicographically
 * smallest on ties, so certificates are reproducible.
 */
struct SeparationCertificate {
  struct Entry {
    std::vector<int> prefix;
    std::vector<int> witness;
    double distance = 0.0;
  };

  int degree = 0;
  double epsilon0 = 0.0;
  std::vector<Entry> entries;
};

inline SeparationCertificate check_separation_condition(
    const StateSpace& space, int degree,
    std::size_t budget = kDefaultEnumerationBudget) {
  if (degree < 1) {
    throw Error(errc::invalid_argument,
                "separation degree must be >= 1, got " + std::to_string(degree));
  }
  const int m = space.size();
  const std::size_t words = checked_pow(static_cast<std::size_t>(m), degree);
  if (words > budget) {
    throw Error(errc::enumeration_budget_exceeded,
                "degree " + std::to_string(degree) + " enumerates " +
                    std::to_string(words) + " prefixes, budget " +
                    std::to_string(budget));
  }
  std::vector<std::vector<int>> prefixes;
  prefixes.reserve(words);
  for (std::size_t w = 0; w < words; ++w) {
    prefixes.push_back(index_to_word(w, m, degree));
  }
  SeparationCertificate cert;
  cert.degree = degree;
  cert.epsilon0 = space.diameter();  // shrinks below
  for (std::size_t a = 0; a < words; ++a) {
    std::size_t best = words;
    double best_dist = 0.0;
    for (std::size_t b = 0; b < words; ++b) {
      if (b == a) continue;
      double dist = 0.0;
      double weight = 0.5;
      for (int k = 0; k < degree; ++k) {
        dist += space.distance(prefixes[a][static_cast<std::size_t>(k)],
                               prefixes[b][static_cast<std::size_t>(k)]) *
                weight;
        weight *= 0.5;
      }
      // Strict comparison keeps the first (lexicographically smallest)
      // minimizer, since b runs in word-rank order.
      if (best == words || dist < best_dist) {
        best = b;
        best_dist = dist;
      }
    }
    cert.entries.push_back(
        SeparationCertificate::Entry{prefixes[a], prefixes[best], best_dist});
    if (best_dist < cert.epsilon0) cert.epsilon0 = best_dist;
  }
  return cert;
}

/**
 * Coverage certificate for the similarity identity: shifting every depth-K
 * member of a depth-n cylinder n times must produce every word of length
 * K - n.  Verified by actually constructing each member and applying the
 * shift, not by assuming the identity.
 */
struct CoverageReport {
  int shift_count = 0;
  int truncation_depth = 0;
  std::size_t expected_words = 0;
  std::size_t covered_words = 0;
  std::vector<std::vector<int>> missing;  // capped sample of absent words
  std::size_t missing_count = 0;
  bool pass = false;
};

inline CoverageReport similarity_coverage(const Cylinder& cyl, const StateSpace& space,
                                          int K,
                                          std::size_t budget = kDefaultEnumerationBudget) {
  require_valid_cylinder(space, cyl);
  const int n = cyl.depth();
  if (K <= n || K > kMaxTruncationDepth) {
    throw Error(errc::invalid_argument,
                "truncation depth " + std::to_string(K) + " must exceed cylinder depth " +
                    std::to_string(n) + " and stay within " +
                    std::to_string(kMaxTruncationDepth));
  }
  const int m = space.size();
  const std::size_t members = checked_pow(static_cast<std::size_t>(m), K - n);
  if (members > budget) {
    throw Error(errc::enumeration_budget_exceeded,
                "cylinder has " + std::to_string(members) + " depth-" + std::to_string(K) +
                    " members, budget " + std::to_string(budget));
  }
  std::vector<char> seen(members, 0);
  std::size_t covered = 0;
  for (std::size_t suffix = 0; suffix < members; ++suffix) {
    SymbolSequence member{cyl.prefix};
    const auto tail = index_to_word(suffix, m, K - n);
    member.symbols.insert(member.symbols.end(), tail.begin(), tail.end());
    for (int s = 0; s < n; ++s) member = shift(member);
    const std::size_t image = word_index(member.symbols, m);
    if (!seen[image]) {
      seen[image] = 1;
      ++covered;
    }
  }
  CoverageReport report;
  report.shift_count = n;
  report.truncation_depth = K;
  report.expected_words = members;
  report.covered_words = covered;
  for (std::size_t w = 0; w < members && report.missing.size() < 64; ++w) {
    if (!seen[w]) report.missing.push_back(index_to_word(w, m, K - n));
  }
  report.missing_count = members - covered;
  report.pass = covered == members;
  return report;
}

}  // namespace chainchaos
