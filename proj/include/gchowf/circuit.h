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
#include <cstdint>
#include <optional>
#include <vector>

#include "gchowf/gch_state.h"

namespace gchowf {

struct CnotGate {
    Qubit control;
    Qubit target;

    bool operator==(const CnotGate &) const = default;
    auto operator<=>(const CnotGate &) const = default;
};

/// Parallel CNOTs: endpoints pairwise disjoint, gates sorted by (control, target).
struct Layer {
    std::vector<CnotGate> gates;

    bool operator==(const Layer &) const = default;
};

enum class MeasurementBasis : std::uint8_t { Computational = 0, Hadamard = 1 };

/// One round of the quantum-classical function: CNOT layers, then a readout of
/// `measured` in the fixed per-qubit basis, then the layers in reverse.
struct ConstituentCircuit {
    std::vector<Layer> layers;
    /// One per final-layer gate, ascending.
    std::vector<Qubit> marked;
    /// Subset of `marked`, ascending.
    std::vector<Qubit> measured;
    /// Parallel to `measured`.
    std::vector<MeasurementBasis> measurement_basis;

    std::size_t gate_count() const;
    bool operator==(const ConstituentCircuit &) const = default;
};

struct CircuitFamily {
    std::size_t n = 0;
    /// The basis the family was sampled for. Not part of the wire format, so
    /// a decoded family leaves it empty and equality ignores it.
    std::optional<GchBasis> seeding_basis;
    std::vector<ConstituentCircuit> circuits;

    std::size_t gate_count() const;
    bool operator==(const CircuitFamily &other) const {
        return n == other.n && circuits == other.circuits;
    }
};

/// n(n-2): n circuits, n/2 - 1 measured qubits each, 2 bits per readout.
inline std::size_t output_bits(std::size_t n) {
    return n * (n - 2);
}

/// Throws InvalidArgument unless n is even and >= 4.
void require_owf_size(std::size_t n);

}  // namespace gchowf
