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

#include <optional>
#include <string_view>

#include "gchowf/gch_state.h"

namespace gchowf {

// Compatibility table for CNOT(control -> target) on a GCH state.
//
//   control  target         result
//   C        anything       allowed: C-target XORs, H-target unchanged (phase),
//                           GHZ-target flips that member's bit when control is 1
//   H        H              allowed: control sign flips iff target is H-
//   H+       C              allowed: new block {c,t} with bits (0, target value)
//   H-       C              rejected (relative phase)
//   H        GHZ            rejected (4-branch superposition)
//   GHZ      C              allowed: block grows, new bit = target ^ bits[c]
//   GHZ      H+             allowed, unchanged
//   GHZ      H-             rejected (relative phase)
//   GHZ      same block     allowed: target leaves as C valued bits[t] ^ bits[c];
//                           a 2-block collapses to (H+, C)
//   GHZ      other block    rejected (4-branch superposition)

/// nullopt when CNOT(control -> target) keeps `state` in GCH form, otherwise
/// the reason it does not.
std::optional<std::string_view> incompatibility(const GchState &state, Qubit control, Qubit target);

inline bool is_compatible(const GchState &state, Qubit control, Qubit target) {
    return !incompatibility(state, control, target).has_value();
}

/// Throws IncompatiblePair (and leaves `state` untouched) if the pair is rejected.
void apply_cnot_in_place(GchState &state, Qubit control, Qubit target);

GchState apply_cnot_symbolic(const GchState &state, Qubit control, Qubit target);

// Basis-level compatibility: the pair must be compatible for *every* state with
// this basis, so that a circuit chosen from the basis alone never fails on an
// on-basis input. This rules out H-control/C-target and GHZ-control/H-target,
// whose outcome depends on a sign.

std::optional<std::string_view> incompatibility(const GchBasis &basis, Qubit control, Qubit target);

inline bool is_compatible(const GchBasis &basis, Qubit control, Qubit target) {
    return !incompatibility(basis, control, target).has_value();
}

void apply_cnot_in_place(GchBasis &basis, Qubit control, Qubit target);

GchBasis apply_cnot_symbolic(const GchBasis &basis, Qubit control, Qubit target);

}  // namespace gchowf
