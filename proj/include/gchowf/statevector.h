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
#include <span>
#include <vector>

#include "gchowf/gch_state.h"
#include "gchowf/kernels.h"

namespace gchowf {

/// Dense 2^n amplitude vector. Only used as a brute-force oracle at small n;
/// the OWF itself never touches it.
class Statevector {
   public:
    static constexpr std::size_t kMaxQubits = 24;

    /// |0...0>
    explicit Statevector(std::size_t n);
    Statevector(std::size_t n, std::vector<Amplitude> amplitudes);
    static Statevector basis_state(std::size_t n, std::size_t index);

    std::size_t num_qubits() const {
        return n_;
    }
    std::size_t dimension() const {
        return amps_.size();
    }
    std::span<const Amplitude> amplitudes() const {
        return amps_;
    }
    std::span<Amplitude> amplitudes() {
        return amps_;
    }
    Amplitude operator[](std::size_t i) const {
        return amps_[i];
    }

    double norm_squared() const;
    void apply_cnot(Qubit control, Qubit target);
    void apply_hadamard(Qubit q);
    double probability_one(Qubit q) const;
    void collapse(Qubit q, bool outcome);

   private:
    std::size_t n_;
    std::vector<Amplitude> amps_;
};

inline constexpr std::size_t kDefaultStatevectorCap = 14;
inline constexpr double kAmplitudeTolerance = 1e-9;

/// Throws TooLarge when n exceeds `max_qubits`.
Statevector to_statevector(const GchState &state, std::size_t max_qubits = kDefaultStatevectorCap);

/// <a|b>. Throws DimensionMismatch on differing n.
Amplitude inner_product(const Statevector &a, const Statevector &b);

/// True when a = e^{i phi} b amplitude-wise within `tol`.
bool equal_up_to_phase(const Statevector &a, const Statevector &b, double tol = kAmplitudeTolerance);

/// Copy rotated so that the first amplitude with magnitude above `tol` is
/// real and positive. Equal-up-to-phase vectors map to nearly equal vectors.
Statevector phase_normalized(const Statevector &v, double tol = 1e-6);

}  // namespace gchowf
