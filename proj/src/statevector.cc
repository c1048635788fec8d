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

#include "gchowf/statevector.h"

#include <cmath>

#include "gchowf/errors.h"

namespace gchowf {

Statevector::Statevector(std::size_t n) : n_(n) {
    if (n > kMaxQubits) {
        throw TooLarge("statevector", n, kMaxQubits);
    }
    amps_.assign(std::size_t{1} << n, 0.0);
    amps_[0] = 1.0;
}

Statevector::Statevector(std::size_t n, std::vector<Amplitude> amplitudes) : n_(n), amps_(std::move(amplitudes)) {
    if (n > kMaxQubits) {
        throw TooLarge("statevector", n, kMaxQubits);
    }
    if (amps_.size() != (std::size_t{1} << n)) {
        throw DimensionMismatch("statevector needs 2^" + std::to_string(n) + " amplitudes, got " +
                                std::to_string(amps_.size()));
    }
}

Statevector Statevector::basis_state(std::size_t n, std::size_t index) {
    Statevector v(n);
    if (index >= v.dimension()) {
        throw DimensionMismatch("basis index out of range");
    }
    v.amps_[0] = 0.0;
    v.amps_[index] = 1.0;
    return v;
}

double Statevector::norm_squared() const {
    return parallel::norm_squared(amps_);
}

void Statevector::apply_cnot(Qubit control, Qubit target) {
    if (control >= n_ || target >= n_ || control == target) {
        throw DimensionMismatch("bad CNOT endpoints");
    }
    parallel::apply_cnot(amps_, n_, control, target);
}

void Statevector::apply_hadamard(Qubit q) {
    if (q >= n_) {
        throw DimensionMismatch("bad Hadamard qubit");
    }
    parallel::apply_hadamard(amps_, n_, q);
}

double Statevector::probability_one(Qubit q) const {
    if (q >= n_) {
        throw DimensionMismatch("bad measured qubit");
    }
    return parallel::probability_one(amps_, n_, q);
}

void Statevector::collapse(Qubit q, bool outcome) {
    if (q >= n_) {
        throw DimensionMismatch("bad measured qubit");
    }
    parallel::collapse(amps_, n_, q, outcome);
}

Statevector to_statevector(const GchState &state, std::size_t max_qubits) {
    const std::size_t n = state.num_qubits();
    if (n > max_qubits) {
        throw TooLarge("to_statevector", n, max_qubits);
    }
    std::vector<Amplitude> amps(std::size_t{1} << n);
    parallel::expand_gch(state, amps);
    return Statevector(n, std::move(amps));
}

Amplitude inner_product(const Statevector &a, const Statevector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DimensionMismatch("inner product of registers with different sizes");
    }
    return parallel::inner_product(a.amplitudes(), b.amplitudes());
}

bool equal_up_to_phase(const Statevector &a, const Statevector &b, double tol) {
    if (a.num_qubits() != b.num_qubits()) {
        return false;
    }
    // Align on the largest amplitude of `a` to get a well-conditioned phase.
    std::size_t pivot = 0;
    for (std::size_t i = 1; i < a.dimension(); ++i) {
        if (std::abs(a[i]) > std::abs(a[pivot])) {
            pivot = i;
        }
    }
    if (std::abs(b[pivot]) < 1e-12) {
        return std::abs(a[pivot]) < tol && a.norm_squared() < tol && b.norm_squared() < tol;
    }
    const Amplitude phase = a[pivot] / b[pivot];
    if (std::abs(std::abs(phase) - 1.0) > tol * 10) {
        return false;
    }
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        if (std::abs(a[i] - phase * b[i]) > tol) {
            return false;
        }
    }
    return true;
}

Statevector phase_normalized(const Statevector &v, double tol) {
    std::vector<Amplitude> amps(v.amplitudes().begin(), v.amplitudes().end());
    for (const auto &a : amps) {
        if (std::abs(a) > tol) {
            const Amplitude rot = std::conj(a) / std::abs(a);
            for (auto &x : amps) {
                x *= rot;
            }
            break;
        }
    }
    return Statevector(v.num_qubits(), std::move(amps));
}

}  // namespace gchowf
