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

#include "chainchaos/state_space.hpp"

#include <gtest/gtest.h>

#include "chainchaos/prng.hpp"
#include "oracle.hpp"
#include "support.hpp"

namespace {

using chainchaos::Error;
using chainchaos::StateSpace;
using chainchaos::errc;
using chainchaos::min_pairwise_distance;
using chainchaos::validate_metric;
using testsupport::throws_code;

TEST(StateSpace, DiscreteMetricIsValid) {
  const auto space = StateSpace::discrete(2);
  EXPECT_EQ(space.size(), 2);
  EXPECT_EQ(space.distance(0, 0), 0.0);
  EXPECT_EQ(space.distance(0, 1), 1.0);
  EXPECT_EQ(space.diameter(), 1.0);
  EXPECT_EQ(space.label(0), "s1");
  EXPECT_EQ(space.label(1), "s2");
  EXPECT_EQ(min_pairwise_distance(space), 1.0);
}

TEST(StateSpace, DefaultLabelsCountUpFromOne) {
  const auto space = StateSpace::discrete(4);
  EXPECT_EQ(space.label(3), "s4");
  EXPECT_EQ(space.index_of("s2"), 1);
  EXPECT_EQ(space.index_of("nope"), std::nullopt);
}

TEST(StateSpace, RejectsNonSquare) {
  EXPECT_TRUE(throws_code(errc::non_square, [] {
    validate_metric({{0.0, 1.0}, {1.0, 0.0, 2.0}});
  }));
}

TEST(StateSpace, RejectsSingleState) {
  EXPECT_TRUE(throws_code(errc::too_few_states, [] { validate_metric({{0.0}}); }));
  EXPECT_TRUE(throws_code(errc::too_few_states, [] { StateSpace::discrete(1); }));
}

TEST(StateSpace, RejectsAsymmetry) {
  EXPECT_TRUE(throws_code(errc::asymmetric_metric, [] {
    validate_metric({{0.0, 0.4}, {0.5, 0.0}});
  }));
}

TEST(StateSpace, RejectsNegativeAndNonFinite) {
  EXPECT_TRUE(throws_code(errc::negative_entry, [] {
    validate_metric({{0.0, -0.1}, {-0.1, 0.0}});
  }));
  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_TRUE(throws_code(errc::negative_entry, [&] {
    validate_metric({{0.0, inf}, {inf, 0.0}});
  }));
}

TEST(StateSpace, RejectsNonzeroDiagonalAndZeroOffDiagonal) {
  EXPECT_TRUE(throws_code(errc::nonzero_diagonal, [] {
    validate_metric({{0.1, 1.0}, {1.0, 0.0}});
  }));
  EXPECT_TRUE(throws_code(errc::zero_off_diagonal, [] {
    validate_metric({{0.0, 0.0}, {0.0, 0.0}});
  }));
}

TEST(StateSpace, TriangleViolationReportsOffendingTriple) {
  // d(a,c) = 1.0 exceeds d(a,b) + d(b,c) = 0.8.
  try {
    validate_metric({{0.0, 0.4, 1.0}, {0.4, 0.0, 0.4}, {1.0, 0.4, 0.0}});
    FAIL() << "expected TriangleViolation";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), errc::triangle_violation);
    ASSERT_EQ(e.indices().size(), 3u);
    EXPECT_EQ(e.indices()[0], 0);
    EXPECT_EQ(e.indices()[1], 1);
    EXPECT_EQ(e.indices()[2], 2);
  }
}

TEST(StateSpace, LabelValidation) {
  EXPECT_TRUE(throws_code(errc::invalid_argument, [] {
    StateSpace::discrete(2, {"a"});
  }));
  EXPECT_TRUE(throws_code(errc::invalid_argument, [] {
    StateSpace::discrete(2, {"a", "a"});
  }));
  EXPECT_TRUE(throws_code(errc::invalid_argument, [] {
    StateSpace::discrete(2, {"a", ""});
  }));
}

TEST(StateSpace, MinPairwiseDistanceExamples) {
  // Off-diagonal distances {0.2, 0.7, 0.8}; every triangle holds strictly.
  const auto space =
      validate_metric({{0.0, 0.2, 0.7}, {0.2, 0.0, 0.8}, {0.7, 0.8, 0.0}});
  EXPECT_EQ(min_pairwise_distance(space), 0.2);
  EXPECT_EQ(space.diameter(), 0.8);

  const auto two = validate_metric({{0.0, 0.625}, {0.625, 0.0}});
  EXPECT_EQ(min_pairwise_distance(two), 0.625);
}

TEST(StateSpace, RandomValidTablesAccepted) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int m = 2 + static_cast<int>(seed % 3);
    const auto table = oracle::random_metric(m, seed);
    const auto space = validate_metric(table);
    double min_entry = table[0][1];
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        if (i != j) min_entry = std::min(min_entry, table[i][j]);
        EXPECT_EQ(space.distance(i, j), table[i][j]);
      }
    }
    EXPECT_EQ(min_pairwise_distance(space), min_entry);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        if (i != j) {
          EXPECT_LE(min_pairwise_distance(space), space.distance(i, j));
        }
      }
    }
  }
}

// Each injected violation must be rejected with the matching code.
TEST(StateSpace, InjectedViolationsRejected) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const int m = 3 + static_cast<int>(seed % 2);
    chainchaos::SplitMix64 rng(seed * 977 + 5);
    const auto pick = [&] { return static_cast<int>(rng.next_double() * m); };
    int i = pick(), j = pick();
    while (j == i) j = pick();

    auto asym = oracle::random_metric(m, seed);
    asym[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += 0.01;
    EXPECT_TRUE(throws_code(errc::asymmetric_metric, [&] { validate_metric(asym); }));

    auto diag = oracle::random_metric(m, seed);
    diag[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 0.3;
    EXPECT_TRUE(throws_code(errc::nonzero_diagonal, [&] { validate_metric(diag); }));

    auto zero = oracle::random_metric(m, seed);
    zero[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 0.0;
    zero[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = 0.0;
    EXPECT_TRUE(throws_code(errc::zero_off_diagonal, [&] { validate_metric(zero); }));

    auto neg = oracle::random_metric(m, seed);
    neg[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = -0.2;
    neg[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = -0.2;
    EXPECT_TRUE(throws_code(errc::negative_entry, [&] { validate_metric(neg); }));

    // Entries live in [0.5, 1.5), so any pair sum is below 3.0.
    auto tri = oracle::random_metric(m, seed);
    tri[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 3.5;
    tri[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = 3.5;
    EXPECT_TRUE(throws_code(errc::triangle_violation, [&] { validate_metric(tri); }));
  }
}

}  // namespace
