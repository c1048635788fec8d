// Copyright 2026 The gchowf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>

#include "gchowf/gch_state.h"
#include "gchowf/kernels.h"
#include "gchowf/prng.h"
#include "gchowf/statevector.h"

namespace gchowf {

/// <s1|s2> between the canonical representatives. When both states share the
/// same GHZ partition the product formula is used and any n works; otherwise
/// both are expanded densely (TooLarge past `max_qubits`).
Amplitude inner_product(const GchState &s1, const GchState &s2, std::size_t max_qubits = kDefaultStatevectorCap);

/// Per-trial pass probability of the swap test: (1 + |<s1|s2>|^2) / 2.
double swap_test_pass_probability(const GchState &s1, const GchState &s2);

/// k independent swap tests; true iff all pass. Each trial draws one
/// uniform01() from `randomness`.
bool swap_test(const GchState &s1, const GchState &s2, std::size_t k, PrngStream &randomness);

}  // namespace gchowf
