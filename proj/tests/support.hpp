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

#include <gtest/gtest.h>

#include <functional>

#include "chainchaos/error.hpp"

namespace testsupport {

/// Asserts that fn throws chainchaos::Error with the expected code.
inline testing::AssertionResult throws_code(chainchaos::errc expected,
                                            const std::function<void()>& fn) {
  try {
    fn();
  } catch (const chainchaos::Error& e) {
    if (e.code() == expected) return testing::AssertionSuccess();
    return testing::AssertionFailure()
           << "threw " << chainchaos::errc_name(e.code()) << ": " << e.what();
  } catch (const std::exception& e) {
    return testing::AssertionFailure() << "threw non-library exception: " << e.what();
  }
  return testing::AssertionFailure() << "did not throw";
}

}  // namespace testsupport
