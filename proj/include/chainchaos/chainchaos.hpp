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

#include "chainchaos/chain_spec.hpp"
#include "chainchaos/chaos_analyzer.hpp"
#include "chainchaos/config.hpp"
#include "chainchaos/digest.hpp"
#include "chainchaos/error.hpp"
#include "chainchaos/io.hpp"
#include "chainchaos/prng.hpp"
#include "chainchaos/random_walk.hpp"
#include "chainchaos/sequence_space.hpp"
#include "chainchaos/simulator.hpp"
#include "chainchaos/state_space.hpp"
#include "chainchaos/transition_model.hpp"
