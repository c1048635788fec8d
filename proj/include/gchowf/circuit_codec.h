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

#include <cstdint>
#include <span>
#include <vector>

#include "gchowf/circuit.h"

namespace gchowf {

// Wire layout, MSB first, positions 1-based:
//
//   [n: 16]
//   per circuit:
//     [layer_count: 16]
//     per layer: [pair_count: 8] then pairs ascending by (control, target),
//                each [control: 16][target: 16]
//     [marked mask: n bits][measured mask: n bits]
//     per measured qubit ascending: [basis: 1] (0 computational, 1 Hadamard)
//     zero padding to a byte boundary
//
// The decoder accepts exactly the byte strings the encoder can produce.

std::vector<std::uint8_t> encode_circuit_family(const CircuitFamily &family);

/// Throws MalformedCircuitEncoding with the byte offset of the first problem.
CircuitFamily decode_circuit_family(std::span<const std::uint8_t> bytes);

}  // namespace gchowf
