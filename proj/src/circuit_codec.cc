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

#include "gchowf/circuit_codec.h"

#include <algorithm>
#include <string>

#include "gchowf/bitstring.h"
#include "gchowf/errors.h"

namespace gchowf {

std::vector<std::uint8_t> encode_circuit_family(const CircuitFamily &family) {
    const std::size_t n = family.n;
    if (n == 0 || n > 0xFFFF) {
        throw InvalidArgument("circuit family qubit count must fit in 16 bits");
    }
    Bitstring out;
    out.append(n, 16);
    for (const auto &c : family.circuits) {
        if (c.layers.size() > 0xFFFF) {
            throw InvalidArgument("too many layers for the wire format");
        }
        out.append(c.layers.size(), 16);
        for (const auto &layer : c.layers) {
            if (layer.gates.size() > 0xFF) {
                throw InvalidArgument("too many gates in one layer for the wire format");
            }
            auto gates = layer.gates;
            std::sort(gates.begin(), gates.end());
            out.append(gates.size(), 8);
            for (const auto &g : gates) {
                out.append(g.control + 1, 16);
                out.append(g.target + 1, 16);
            }
        }
        Bitstring marked(n);
        Bitstring measured(n);
        for (Qubit q : c.marked) {
            marked.set(q, true);
        }
        for (Qubit q : c.measured) {
            measured.set(q, true);
        }
        out.append(marked);
        out.append(measured);
        // Flags follow ascending measured order.
        std::vector<std::pair<Qubit, MeasurementBasis>> flags;
        for (std::size_t i = 0; i < c.measured.size(); ++i) {
            flags.emplace_back(c.measured[i], c.measurement_basis.at(i));
        }
        std::sort(flags.begin(), flags.end());
        for (const auto &[q, basis] : flags) {
            out.push_back(basis == MeasurementBasis::Hadamard);
        }
        out.pad_to_byte();
    }
    return out.to_bytes();
}

CircuitFamily decode_circuit_family(std::span<const std::uint8_t> bytes) {
    BitReader in(bytes);
    auto fail = [&](const std::string &what) -> void { throw MalformedCircuitEncoding(what, in.byte_offset()); };

    CircuitFamily family;
    family.n = in.read(16);
    const std::size_t n = family.n;
    if (n == 0) {
        fail("qubit count is zero");
    }
    for (std::size_t i = 0; i < n; ++i) {
        ConstituentCircuit c;
        const std::size_t layer_count = in.read(16);
        for (std::size_t l = 0; l < layer_count; ++l) {
            Layer layer;
            const std::size_t pair_count = in.read(8);
            std::vector<bool> used(n, false);
            for (std::size_t g = 0; g < pair_count; ++g) {
                const std::size_t control = in.read(16);
                const std::size_t target = in.read(16);
                if (control == 0 || target == 0 || control > n || target > n) {
                    fail("gate endpoint outside 1.." + std::to_string(n));
                }
                CnotGate gate{static_cast<Qubit>(control - 1), static_cast<Qubit>(target - 1)};
                if (gate.control == gate.target) {
                    fail("gate control equals target");
                }
                if (used[gate.control] || used[gate.target]) {
                    fail("gates in one layer share a qubit");
                }
                used[gate.control] = used[gate.target] = true;
                if (!layer.gates.empty() && !(layer.gates.back() < gate)) {
                    fail("gates in a layer are not in ascending order");
                }
                layer.gates.push_back(gate);
            }
            c.layers.push_back(std::move(layer));
        }
        for (Qubit q = 0; q < n; ++q) {
            if (in.read_bit()) {
                c.marked.push_back(q);
            }
        }
        for (Qubit q = 0; q < n; ++q) {
            if (in.read_bit()) {
                if (!std::binary_search(c.marked.begin(), c.marked.end(), q)) {
                    fail("measured qubit " + std::to_string(q + 1) + " is not marked");
                }
                c.measured.push_back(q);
            }
        }
        for (std::size_t m = 0; m < c.measured.size(); ++m) {
            c.measurement_basis.push_back(in.read_bit() ? MeasurementBasis::Hadamard : MeasurementBasis::Computational);
        }
        // One marked qubit per final-layer gate, drawn from that gate.
        const std::vector<CnotGate> no_gates;
        const auto &final_gates = c.layers.empty() ? no_gates : c.layers.back().gates;
        if (c.marked.size() != final_gates.size()) {
            fail("marked count differs from the final layer's gate count");
        }
        for (const auto &g : final_gates) {
            const bool c_marked = std::binary_search(c.marked.begin(), c.marked.end(), g.control);
            const bool t_marked = std::binary_search(c.marked.begin(), c.marked.end(), g.target);
            if (c_marked == t_marked) {
                fail("each final-layer gate must contribute exactly one marked qubit");
            }
        }
        in.align();
        family.circuits.push_back(std::move(c));
    }
    if (!in.at_end()) {
        fail("trailing bytes after the last circuit");
    }
    return family;
}

}  // namespace gchowf
