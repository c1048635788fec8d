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
#include <functional>
#include <string>
#include <vector>

#include "gchowf/gch_state.h"
#include "gchowf/prng.h"

namespace gchowf {

/// Exact count of n-qubit GCH states; fits in 128 bits up to kMaxCountedQubits.
using StateCount = unsigned __int128;
inline constexpr std::size_t kMaxCountedQubits = 34;

inline constexpr std::size_t kMaxEnumeratedStates = 6;
inline constexpr std::size_t kMaxEnumeratedBases = 8;

std::string to_string(StateCount v);

/// Number of distinct n-qubit GCH states (4, 18, 92, 532, ... for n = 1, 2, 3, 4).
StateCount count_states(std::size_t n);
/// Number of distinct n-qubit bases (2, 5, 15, 52, ...).
StateCount count_bases(std::size_t n);

// Canonical order: the smallest unassigned position is decided first, trying
// |0>, |1>, |+>, |-> and then GHZ blocks by growing size, companion sets in
// lexicographic order, and free bits counting up. unrank_state(n, i) is the
// i-th state in that order.

/// Visits every state in canonical order until `visit` returns false.
void for_each_state(std::size_t n, const std::function<bool(const GchState &)> &visit);
std::vector<GchState> enumerate_states(std::size_t n);
GchState unrank_state(std::size_t n, StateCount index);

void for_each_basis(std::size_t n, const std::function<bool(const GchBasis &)> &visit);
std::vector<GchBasis> enumerate_bases(std::size_t n);

/// Number of states with basis `b`: 2 per singleton, 2^(j-1) per j-block.
StateCount count_states_of_basis(const GchBasis &b);

/// The value assignment with index i: singletons take one bit each (C0/C1,
/// H+/H-) from the high end, then each block its j-1 free bits.
GchState state_of_basis(const GchBasis &b, StateCount index);

/// All states of basis `b` in index order. TooLarge past 2^20 states.
std::vector<GchState> states_of_basis(const GchBasis &b);

/// Uniform over the states of basis `b`.
GchState sample_state_of_basis(const GchBasis &b, PrngStream &randomness);

}  // namespace gchowf
