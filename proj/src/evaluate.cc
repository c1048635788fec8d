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

#include "gchowf/evaluate.h"

#include <stdexcept>

#include "gchowf/circuit_codec.h"
#include "gchowf/cnot_rules.h"
#include "gchowf/errors.h"
#include "gchowf/state_codec.h"
#include "gchowf/statevector.h"

namespace gchowf {

namespace {

void apply_gate(GchState &s, const CnotGate &g) {
    try {
        apply_cnot_in_place(s, g.control, g.target);
    } catch (const IncompatiblePair &e) {
        throw OffBasisInput(std::string("state does not match the circuit's basis: ") + e.what());
    }
}

}  // namespace

ConstituentResult eval_constituent(const GchState &state, const ConstituentCircuit &circuit) {
    GchState s = state;
    for (const auto &layer : circuit.layers) {
        for (const auto &g : layer.gates) {
            apply_gate(s, g);
        }
    }
    ConstituentResult result;
    for (std::size_t i = 0; i < circuit.measured.size(); ++i) {
        const Qubit q = circuit.measured[i];
        if (q >= s.num_qubits()) {
            throw OffBasisInput("measured qubit outside the register");
        }
        const auto kind = s.label(q).kind;
        const bool hadamard = circuit.measurement_basis[i] == MeasurementBasis::Hadamard;
        if (hadamard ? !is_hadamard(kind) : !is_computational(kind)) {
            throw OffBasisInput("measured qubit " + std::to_string(q + 1) + " is not an eigenstate of its basis");
        }
        result.outcome.push_back(hadamard);
        result.outcome.push_back(kind == QubitKind::C1 || kind == QubitKind::HMinus);
    }
    for (auto layer = circuit.layers.rbegin(); layer != circuit.layers.rend(); ++layer) {
        for (auto g = layer->gates.rbegin(); g != layer->gates.rend(); ++g) {
            apply_gate(s, *g);
        }
    }
    if (!(s == state)) {
        throw std::logic_error("reverse circuit did not restore the input state");
    }
    result.restored = std::move(s);
    return result;
}

Bitstring family_outcome(const GchState &state, const CircuitFamily &family) {
    if (state.num_qubits() != family.n) {
        throw OffBasisInput("state and family have different qubit counts");
    }
    Bitstring y;
    for (const auto &c : family.circuits) {
        y.append(eval_constituent(state, c).outcome);
    }
    return y;
}

std::vector<std::uint8_t> OwfOutput::to_bytes() const {
    auto out = y.to_bytes();
    out.insert(out.end(), circuit_bytes.begin(), circuit_bytes.end());
    return out;
}

OwfOutput OwfOutput::parse(std::span<const std::uint8_t> bytes, std::size_t n) {
    require_owf_size(n);
    const std::size_t ybits = output_bits(n);
    const std::size_t ybytes = (ybits + 7) / 8;
    if (bytes.size() < ybytes) {
        throw InvalidArgument("y' shorter than the " + std::to_string(ybits) + "-bit measurement record");
    }
    auto padded = Bitstring::from_bytes(bytes.first(ybytes), ybytes * 8);
    for (std::size_t i = ybits; i < padded.size(); ++i) {
        if (padded[i]) {
            throw InvalidArgument("y' padding bit " + std::to_string(i) + " is set");
        }
    }
    OwfOutput out;
    out.n = n;
    out.y = padded.slice(0, ybits);
    out.circuit_bytes.assign(bytes.begin() + static_cast<std::ptrdiff_t>(ybytes), bytes.end());
    return out;
}

OwfOutput eval_family(const GchState &state, FamilyCache &cache) {
    require_owf_size(state.num_qubits());
    const auto family = cache.get(basis_of(state));
    OwfOutput out;
    out.n = state.num_qubits();
    out.y = family_outcome(state, *family);
    out.circuit_bytes = encode_circuit_family(*family);
    return out;
}

OwfOutput cc_owf(const Bitstring &x, std::size_t n, FamilyCache &cache) {
    require_owf_size(n);
    return eval_family(decode_state(x, n), cache);
}

Bitstring off_basis_sample(const CircuitFamily &family, const GchState &state, PrngStream &randomness) {
    const std::size_t n = state.num_qubits();
    if (n > kMaxOffBasisQubits) {
        throw TooLarge("off_basis_sample", n, kMaxOffBasisQubits);
    }
    if (n != family.n) {
        throw DimensionMismatch("state and family have different qubit counts");
    }
    Statevector v = to_statevector(state, kMaxOffBasisQubits);
    Bitstring y;
    for (const auto &c : family.circuits) {
        for (const auto &layer : c.layers) {
            for (const auto &g : layer.gates) {
                v.apply_cnot(g.control, g.target);
            }
        }
        for (std::size_t i = 0; i < c.measured.size(); ++i) {
            const Qubit q = c.measured[i];
            const bool hadamard = c.measurement_basis[i] == MeasurementBasis::Hadamard;
            if (hadamard) {
                v.apply_hadamard(q);
            }
            double p1 = v.probability_one(q);
            // Eigenstates give p1 within rounding of 0 or 1; keep them exact.
            if (p1 < 1e-12) {
                p1 = 0.0;
            } else if (p1 > 1.0 - 1e-12) {
                p1 = 1.0;
            }
            const bool one = randomness.uniform01() < p1;
            v.collapse(q, one);
            if (hadamard) {
                v.apply_hadamard(q);
            }
            y.push_back(hadamard);
            y.push_back(one);
        }
        for (auto layer = c.layers.rbegin(); layer != c.layers.rend(); ++layer) {
            for (auto g = layer->gates.rbegin(); g != layer->gates.rend(); ++g) {
                v.apply_cnot(g->control, g->target);
            }
        }
    }
    return y;
}

}  // namespace gchowf
