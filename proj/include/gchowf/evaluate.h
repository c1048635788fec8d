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
#include <span>
#include <vector>

#include "gchowf/bitstring.h"
#include "gchowf/circuit.h"
#include "gchowf/gch_state.h"
#include "gchowf/prng.h"
#include "gchowf/sampler.h"

namespace gchowf {

// Readout code for one measured qubit: the first bit is the measurement basis,
// the second the eigenvalue. 00 = |0>, 01 = |1>, 10 = |+>, 11 = |->.

struct ConstituentResult {
    Bitstring outcome;
    GchState restored;
};

/// Runs the layers symbolically, reads the measured qubits, runs the layers
/// backwards. Throws OffBasisInput if a gate is incompatible with the state or
/// a measured qubit is not a singleton of the circuit's measurement basis.
ConstituentResult eval_constituent(const GchState &state, const ConstituentCircuit &circuit);

/// y for a given family: constituent outcomes concatenated in circuit order.
Bitstring family_outcome(const GchState &state, const CircuitFamily &family);

/// y' = y || encoding of the family. n is carried out of band.
struct OwfOutput {
    std::size_t n = 0;
    Bitstring y;
    std::vector<std::uint8_t> circuit_bytes;

    /// [y zero-padded to a byte][circuit bytes]
    std::vector<std::uint8_t> to_bytes() const;
    /// Splits y' given n. Throws InvalidArgument if too short or if y's
    /// padding bits are set.
    static OwfOutput parse(std::span<const std::uint8_t> bytes, std::size_t n);

    bool operator==(const OwfOutput &) const = default;
};

/// The quantum-classical function on a GCH state: samples (or reuses) the
/// family for basis_of(state), evaluates it and attaches its encoding.
OwfOutput eval_family(const GchState &state, FamilyCache &cache = default_family_cache());

/// The classical-classical function: decode x, take its basis, sample the
/// basis-seeded family, evaluate, append the family encoding.
OwfOutput cc_owf(const Bitstring &x, std::size_t n, FamilyCache &cache = default_family_cache());

inline constexpr std::size_t kMaxOffBasisQubits = 10;

/// Dense simulation of `family` on an arbitrary GCH state: projective
/// measurement of each measured qubit in its circuit basis with Born sampling
/// and collapse, then the reverse layers. One uniform01() per measurement.
Bitstring off_basis_sample(const CircuitFamily &family, const GchState &state, PrngStream &randomness);

}  // namespace gchowf
