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

#include "gchowf/lab.h"

#include <algorithm>
#include <chrono>
#include <exception>
#include <json.hpp>
#include <sstream>

#include "gchowf/circuit_codec.h"
#include "gchowf/enumerate.h"
#include "gchowf/errors.h"
#include "gchowf/sampler.h"
#include "gchowf/state_codec.h"

namespace gchowf::lab {

namespace {

constexpr std::size_t kMaxAttackQubits = 8;

template <typename Fn>
void parallel_for(std::size_t count, Fn &&fn) {
    std::exception_ptr error;
    const auto total = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < total; ++i) {
        try {
            fn(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(gchowf_lab_error)
            if (!error) {
                error = std::current_exception();
            }
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

void check_gates(const std::vector<Gate> &u, std::size_t n) {
    if (n > kMaxAttackQubits) {
        throw TooLarge("attack register", n, kMaxAttackQubits);
    }
    for (const auto &g : u) {
        if (g.a >= n || (g.kind == GateKind::CNOT && (g.b >= n || g.b == g.a))) {
            throw DimensionMismatch("gate acts outside the " + std::to_string(n) + "-qubit register");
        }
    }
}

void apply_inverse(Statevector &v, const std::vector<Gate> &u) {
    // H and CNOT are self-inverse.
    for (auto g = u.rbegin(); g != u.rend(); ++g) {
        if (g->kind == GateKind::H) {
            v.apply_hadamard(g->a);
        } else {
            v.apply_cnot(g->a, g->b);
        }
    }
}

std::size_t index_of(const Bitstring &bits) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        idx = (idx << 1) | static_cast<std::size_t>(bits[i]);
    }
    return idx;
}

/// Random product of |0>,|1>,|+>,|-> and a circuit that makes every qubit
/// computational (H on the Hadamard ones) followed by random CNOTs.
struct DeterministicInstance {
    std::size_t n;
    Statevector input;
    std::vector<Gate> u;
};

DeterministicInstance random_instance(std::size_t max_n, PrngStream &rng) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng.uniform_below(max_n - 1));
    std::string glyphs;
    std::vector<Gate> u;
    for (Qubit q = 0; q < n; ++q) {
        const auto pick = rng.uniform_below(4);
        glyphs += "01+-"[pick];
        if (pick >= 2) {
            u.push_back({GateKind::H, q});
        }
    }
    const std::size_t cnots = n + static_cast<std::size_t>(rng.uniform_below(3 * n));
    for (std::size_t i = 0; i < cnots; ++i) {
        const auto c = static_cast<Qubit>(rng.uniform_below(n));
        auto t = static_cast<Qubit>(rng.uniform_below(n - 1));
        t += t >= c;
        u.push_back({GateKind::CNOT, c, t});
    }
    return {n, to_statevector(GchState::product(glyphs)), std::move(u)};
}

/// The unique outcome of a deterministic full measurement.
Bitstring deterministic_outcome(const Statevector &input, const std::vector<Gate> &u) {
    Statevector v = input;
    apply_gates(v, u);
    const auto amps = v.amplitudes();
    std::size_t best = 0;
    for (std::size_t i = 1; i < amps.size(); ++i) {
        if (std::norm(amps[i]) > std::norm(amps[best])) {
            best = i;
        }
    }
    Bitstring out;
    out.append(best, static_cast<unsigned>(v.num_qubits()));
    return out;
}

}  // namespace

std::vector<Bitstring> brute_force_invert(const OwfOutput &target, std::size_t n,
                                          std::optional<std::uint64_t> candidate_cap) {
    require_owf_size(n);
    if (n > kMaxExhaustiveQubits && !candidate_cap) {
        throw TooLarge("brute_force_invert without a candidate cap", n, kMaxExhaustiveQubits);
    }
    StateCount total = count_states(n);
    if (candidate_cap && *candidate_cap < total) {
        total = *candidate_cap;
    }
    const auto want = target.to_bytes();
    std::vector<std::pair<std::uint64_t, Bitstring>> hits;
    parallel_for(static_cast<std::size_t>(total), [&](std::size_t i) {
        const GchState s = unrank_state(n, i);
        if (eval_family(s).to_bytes() == want) {
            auto enc = encode_state(s);
#pragma omp critical(gchowf_invert_hits)
            hits.emplace_back(i, std::move(enc));
        }
    });
    std::sort(hits.begin(), hits.end());
    std::vector<Bitstring> out;
    for (auto &[i, enc] : hits) {
        out.push_back(std::move(enc));
    }
    return out;
}

std::vector<Bitstring> raw_valid_encodings(std::size_t n) {
    if (n == 0 || n > kMaxExhaustiveQubits) {
        throw TooLarge("raw_valid_encodings", n, kMaxExhaustiveQubits);
    }
    const EncodingLayout layout(n);
    std::vector<Bitstring> out;
    for (std::uint64_t count = 0; count < (std::uint64_t{1} << layout.count_width); ++count) {
        const std::size_t payload = layout.total_bits(count) - layout.count_width;
        // A count past the bound is rejected whatever follows; one probe decides.
        {
            Bitstring probe(2 * n);
            probe.append(count, layout.count_width);
            probe.append(Bitstring(payload - 2 * n));
            if (validate_encoding(probe, n).violated == EncodingRule::CountOverflow) {
                continue;
            }
        }
        const std::size_t pair_bits = payload - 2 * n;
        for (std::uint64_t header = 0; header < (std::uint64_t{1} << (2 * n)); ++header) {
            for (std::uint64_t pairs = 0; pairs < (std::uint64_t{1} << pair_bits); ++pairs) {
                Bitstring enc;
                enc.append(header, static_cast<unsigned>(2 * n));
                enc.append(count, layout.count_width);
                if (pair_bits > 0) {
                    enc.append(pairs, static_cast<unsigned>(pair_bits));
                }
                if (validate_encoding(enc, n).ok()) {
                    out.push_back(std::move(enc));
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

InversionCensus collision_census(std::size_t n) {
    require_owf_size(n);
    if (n > kMaxExhaustiveQubits) {
        throw TooLarge("collision_census", n, kMaxExhaustiveQubits);
    }
    const auto states = enumerate_states(n);
    std::vector<std::vector<std::uint8_t>> outputs(states.size());
    parallel_for(states.size(), [&](std::size_t i) { outputs[i] = eval_family(states[i]).to_bytes(); });

    InversionCensus census;
    census.n = n;
    census.inputs = states.size();
    std::map<std::vector<std::uint8_t>, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < states.size(); ++i) {
        groups[outputs[i]].push_back(i);
    }
    for (const auto &[y, members] : groups) {
        auto &pre = census.preimages[y];
        std::map<std::string, std::uint64_t> by_basis;
        for (std::size_t i : members) {
            pre.push_back(encode_state(states[i]));
            ++by_basis[basis_of(states[i]).to_string()];
        }
        const std::uint64_t k = members.size();
        census.collisions += k * (k - 1) / 2;
        std::uint64_t same = 0;
        for (const auto &[basis, count] : by_basis) {
            same += count * (count - 1) / 2;
            ++census.outputs_per_basis[basis];
        }
        census.cross_basis_collisions += k * (k - 1) / 2 - same;
    }
    return census;
}

std::string InversionCensus::to_text() const {
    std::ostringstream out;
    out << "n=" << n << "\n"
        << "inputs=" << inputs << "\n"
        << "outputs=" << outputs() << "\n"
        << "collisions=" << collisions << "\n"
        << "cross_basis_collisions=" << cross_basis_collisions << "\n"
        << "bases=" << outputs_per_basis.size() << "\n";
    return out.str();
}

std::string InversionCensus::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["inputs"] = inputs;
    j["outputs"] = outputs();
    j["collisions"] = collisions;
    j["cross_basis_collisions"] = cross_basis_collisions;
    return j.dump();
}

Inverter exhaustive_inverter() {
    return [](std::size_t n, const OwfOutput &y) -> std::optional<Bitstring> {
        auto pre = brute_force_invert(y, n);
        if (pre.empty()) {
            return std::nullopt;
        }
        return pre.front();
    };
}

CompositionInstance cc_owf_instance(std::size_t n) {
    CompositionInstance inst;
    inst.n = n;
    inst.m = n;
    inst.f1 = [n](const Bitstring &x) { return decode_state(x, n); };
    inst.f2 = [](const GchState &s) { return eval_family(s); };
    return inst;
}

std::optional<GchState> reduction_thm1(const Inverter &a, const CompositionInstance &instance, const OwfOutput &y) {
    const auto x = a(instance.n, y);
    if (!x || !validate_encoding(*x, instance.n).ok()) {
        return std::nullopt;
    }
    try {
        GchState psi = instance.f1(*x);
        if (!(instance.f2(psi) == y)) {
            return std::nullopt;
        }
        return psi;
    } catch (const Error &) {
        return std::nullopt;
    }
}

std::optional<GchState> reduction_thm3(const CircuitFamily &family, const Bitstring &y, const Inverter &a) {
    OwfOutput target;
    target.n = family.n;
    target.y = y;
    target.circuit_bytes = encode_circuit_family(family);
    const auto x = a(family.n, target);
    if (!x || !validate_encoding(*x, family.n).ok()) {
        return std::nullopt;
    }
    try {
        GchState psi = decode_state(*x, family.n);
        if (family_outcome(psi, family) != y) {
            return std::nullopt;
        }
        return psi;
    } catch (const Error &) {
        return std::nullopt;
    }
}

void apply_gates(Statevector &v, const std::vector<Gate> &u) {
    check_gates(u, v.num_qubits());
    for (const auto &g : u) {
        if (g.kind == GateKind::H) {
            v.apply_hadamard(g.a);
        } else {
            v.apply_cnot(g.a, g.b);
        }
    }
}

Statevector reverse_circuit_attack(const std::vector<Gate> &u, const Bitstring &outcome) {
    const std::size_t n = outcome.size();
    check_gates(u, n);
    Statevector v = Statevector::basis_state(n, index_of(outcome));
    apply_inverse(v, u);
    return v;
}

Statevector substitute_attack(const std::vector<Gate> &u, std::size_t n, const PartialOutcome &outcome) {
    check_gates(u, n);
    if (outcome.measured.size() != outcome.bits.size()) {
        throw DimensionMismatch("measured subset and outcome bits differ in length");
    }
    Bitstring full(n);
    for (std::size_t i = 0; i < outcome.measured.size(); ++i) {
        if (outcome.measured[i] >= n) {
            throw DimensionMismatch("measured qubit outside the register");
        }
        full.set(outcome.measured[i], outcome.bits[i]);
    }
    Statevector v = Statevector::basis_state(n, index_of(full));
    apply_inverse(v, u);
    return v;
}

double outcome_probability(const Statevector &v, const std::vector<Gate> &u, const PartialOutcome &outcome) {
    Statevector w = v;
    apply_gates(w, u);
    const std::size_t n = w.num_qubits();
    std::size_t mask = 0;
    std::size_t want = 0;
    for (std::size_t i = 0; i < outcome.measured.size(); ++i) {
        const std::size_t bit = qubit_mask(n, outcome.measured[i]);
        mask |= bit;
        if (outcome.bits[i]) {
            want |= bit;
        }
    }
    double p = 0.0;
    const auto amps = w.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & mask) == want) {
            p += std::norm(amps[i]);
        }
    }
    return p;
}

AttackReport run_attack_trials(AttackMethod method, std::size_t trials, std::size_t max_n, PrngStream &randomness) {
    if (max_n < 2) {
        throw InvalidArgument("attack trials need at least 2 qubits");
    }
    if (max_n > kMaxAttackQubits) {
        throw TooLarge("attack register", max_n, kMaxAttackQubits);
    }
    AttackReport report;
    for (std::size_t t = 0; t < trials; ++t) {
        const auto inst = random_instance(max_n, randomness);
        const Bitstring z = deterministic_outcome(inst.input, inst.u);
        PartialOutcome target;
        Statevector guess(inst.n);
        if (method == AttackMethod::Reverse) {
            for (Qubit q = 0; q < inst.n; ++q) {
                target.measured.push_back(q);
            }
            target.bits = z;
            guess = reverse_circuit_attack(inst.u, z);
        } else {
            std::vector<Qubit> order(inst.n);
            for (Qubit q = 0; q < inst.n; ++q) {
                order[q] = q;
            }
            randomness.shuffle(order);
            const std::size_t k = 1 + static_cast<std::size_t>(randomness.uniform_below(inst.n));
            target.measured.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
            std::sort(target.measured.begin(), target.measured.end());
            for (Qubit q : target.measured) {
                target.bits.push_back(z[q]);
            }
            guess = substitute_attack(inst.u, inst.n, target);
        }
        ++report.trials;
        report.successes += outcome_probability(guess, inst.u, target) > 1.0 - kAmplitudeTolerance;
    }
    return report;
}

std::vector<SizeRow> size_profile(const std::vector<std::size_t> &n_values, std::uint64_t seed) {
    const PrngStream root = PrngStream::from_u64(seed);
    std::vector<SizeRow> rows;
    for (std::size_t n : n_values) {
        require_owf_size(n);
        PrngStream s = root.substream(n);
        const GchBasis basis = basis_of(sample_uniform_state(n, s).state);
        const auto start = std::chrono::steady_clock::now();
        const CircuitFamily family = sample_circuit_family(basis);
        const auto stop = std::chrono::steady_clock::now();
        SizeRow row;
        row.n = n;
        row.basis = basis.to_string();
        row.gates = family.gate_count();
        for (const auto &c : family.circuits) {
            row.layers += c.layers.size();
        }
        row.bound = n * n * n / 2;
        row.seconds = std::chrono::duration<double>(stop - start).count();
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace gchowf::lab
