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

namespace chainchaos {

/// Default depth at which infinite symbol sequences are truncated.  The
/// contribution of every symbol past depth K is bounded by diam * 2^-K, so
/// K = 32 keeps the tail below diam * 2.4e-10.
inline constexpr int kDefaultTruncationDepth = 32;

/// Hard upper bound on truncation depth.  Beyond 64 the per-symbol weight
/// 2^-k underflows the quantities we report and the closed forms stop being
/// exercised, so deeper requests are rejected rather than silently accepted.
inline constexpr int kMaxTruncationDepth = 64;

/// Cap on the number of words any exhaustive enumeration (cylinder members,
/// word coverage tables, separation scans) may visit before the operation
/// refuses to run.  Overridable per call; this is the conservative default.
inline constexpr std::size_t kDefaultEnumerationBudget = std::size_t{1} << 20;

/// Default recurrence window for unpredictability witness searches.
inline constexpr std::size_t kDefaultWitnessWindow = 10;

/// Tolerance for transition row sums: |sum - 1| must stay below this.
inline constexpr double kRowSumTolerance = 1e-12;

}  // namespace chainchaos
