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
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "gchowf/circuit.h"
#include "gchowf/gch_state.h"
#include "gchowf/prng.h"

namespace gchowf {

enum class Execution { Serial, Parallel };

inline constexpr std::size_t kLayerRetries = 100;
inline constexpr std::size_t kCircuitRetries = 1000;

/// Key = SHA-256(canonical_basis_bytes(basis)).
PrngStream seed_from_basis(const GchBasis &basis);

/// One constituent circuit for `basis`: n layers of disjoint CNOTs that are
/// compatible for every state of the basis, a final layer whose gates each
/// leave a computational or Hadamard singleton to mark, and n/2 - 1 measured
/// qubits drawn from the marked ones.
///
/// Layer procedure: shuffle the positions; walk them in shuffled order and
/// pair each unpaired position with a stream-chosen (partner, orientation)
/// among the compatible ones. A layer with no gate, or a final layer with
/// fewer than n/2 - 1 markable gates, is redrawn (kLayerRetries), after which
/// the whole circuit is redrawn (kCircuitRetries) before SamplingExhausted.
ConstituentCircuit sample_constituent_circuit(const GchBasis &basis, PrngStream &stream);

/// Circuit i is drawn from seed_from_basis(basis).substream(i), so the
/// serial and parallel paths produce identical families.
CircuitFamily sample_circuit_family(const GchBasis &basis, Execution exec = Execution::Parallel);

/// Memoizes sample_circuit_family per basis. Safe to share between threads;
/// concurrent misses for one basis may sample twice but publish one value.
class FamilyCache {
   public:
    std::shared_ptr<const CircuitFamily> get(const GchBasis &basis);
    std::size_t size() const;
    void clear();

   private:
    mutable std::mutex mu_;
    std::map<std::vector<std::uint8_t>, std::shared_ptr<const CircuitFamily>> families_;
};

/// Process-wide cache used when callers do not supply one.
FamilyCache &default_family_cache();

}  // namespace gchowf
