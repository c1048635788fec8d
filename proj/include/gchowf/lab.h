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
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gchowf/bitstring.h"
#include "gchowf/circuit.h"
#include "gchowf/evaluate.h"
#include "gchowf/gch_state.h"
#include "gchowf/prng.h"
#include "gchowf/statevector.h"

namespace gchowf::lab {

inline constexpr std::size_t kMaxExhaustiveQubits = 4;

/// Every valid encoding x with cc_owf(x, n) == target, in canonical state
/// order. Past kMaxExhaustiveQubits a candidate cap is required; with a cap
/// only the first `cap` states in canonical order are tried.
std::vector<Bitstring> brute_force_invert(const OwfOutput &target, std::size_t n,
                                          std::optional<std::uint64_t> candidate_cap = std::nullopt);

/// All valid encodings for n <= 4 found by walking every raw bit layout and
/// keeping those validate_encoding accepts. Sorted lexicographically.
std::vector<Bitstring> raw_valid_encodings(std::size_t n);

struct InversionCensus {
    std::size_t n = 0;
    std::size_t inputs = 0;
    /// y' bytes -> preimage encodings in canonical order.
    std::map<std::vector<std::uint8_t>, std::vector<Bitstring>> preimages;
    /// Basis text -> number of distinct outputs of that basis.
    std::map<std::string, std::size_t> outputs_per_basis;
    std::uint64_t collisions = 0;
    std::uint64_t cross_basis_collisions = 0;

    std::size_t outputs() const {
        return preimages.size();
    }
    std::string to_text() const;
    std::string to_json() const;
};

InversionCensus collision_census(std::size_t n);

using Inverter = std::function<std::optional<Bitstring>(std::size_t, const OwfOutput &)>;

/// First preimage from brute_force_invert, if any.
Inverter exhaustive_inverter();

struct CompositionInstance {
    std::function<GchState(const Bitstring &)> f1;
    std::function<OwfOutput(const GchState &)> f2;
    std::size_t n = 0;
    std::size_t m = 0;

    OwfOutput operator()(const Bitstring &x) const {
        return f2(f1(x));
    }
};

/// f1 = decode_state, f2 = eval_family.
CompositionInstance cc_owf_instance(std::size_t n);

std::optional<GchState> reduction_thm1(const Inverter &a, const CompositionInstance &instance, const OwfOutput &y);

std::optional<GchState> reduction_thm3(const CircuitFamily &family, const Bitstring &y, const Inverter &a);

enum class GateKind { H, CNOT };

struct Gate {
    GateKind kind;
    Qubit a;
    Qubit b = 0;  // CNOT target
};

void apply_gates(Statevector &v, const std::vector<Gate> &u);

/// Prepares |outcome> and runs u backwards. outcome has one bit per qubit.
Statevector reverse_circuit_attack(const std::vector<Gate> &u, const Bitstring &outcome);

struct PartialOutcome {
    std::vector<Qubit> measured;
    Bitstring bits;
};

/// Like reverse_circuit_attack with |0> on every unmeasured qubit.
Statevector substitute_attack(const std::vector<Gate> &u, std::size_t n, const PartialOutcome &outcome);

/// Probability that running u on v and measuring `outcome.measured` gives
/// `outcome.bits`.
double outcome_probability(const Statevector &v, const std::vector<Gate> &u, const PartialOutcome &outcome);

enum class AttackMethod { Reverse, Substitute };

struct AttackReport {
    std::size_t trials = 0;
    std::size_t successes = 0;
    double rate() const {
        return trials == 0 ? 0.0 : static_cast<double>(successes) / static_cast<double>(trials);
    }
};

/// Random eligible instances on 2..max_n qubits. A reverse instance is a
/// random {H, CNOT} circuit with an input chosen so the full measurement is
/// deterministic; a substitute instance measures a random nonempty subset
/// that is deterministic while the rest is a random product state. Success
/// means the returned state reproduces the outcome with probability 1.
AttackReport run_attack_trials(AttackMethod method, std::size_t trials, std::size_t max_n, PrngStream &randomness);

inline constexpr std::uint64_t kSizeProfileSeed = 0x6763686f7766;  // "gchowf"

struct SizeRow {
    std::size_t n = 0;
    std::string basis;
    std::size_t gates = 0;
    std::size_t layers = 0;
    std::size_t bound = 0;  // n^3 / 2
    double seconds = 0.0;
};

/// One basis per n: basis_of(sample_uniform_state(n, from_u64(seed).substream(n))).
std::vector<SizeRow> size_profile(const std::vector<std::size_t> &n_values, std::uint64_t seed = kSizeProfileSeed);

}  // namespace gchowf::lab
