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

#include "gchowf/sampler.h"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <numeric>

#include "gchowf/cnot_rules.h"
#include "gchowf/errors.h"

namespace gchowf {

namespace {

bool is_singleton(BasisKind k) {
    return k == BasisKind::C || k == BasisKind::H;
}

/// A final-layer gate must leave one endpoint as a C/H singleton. Of the
/// basis-compatible gates only GHZ-control on a computational target (which
/// grows the block over both endpoints) fails that.
bool markable(const GchBasis &b, Qubit c, Qubit t) {
    return !(b.kind(c) == BasisKind::Ghz && b.kind(t) == BasisKind::C);
}

Qubit marked_endpoint(const GchBasis &after, const CnotGate &g) {
    return is_singleton(after.kind(g.target)) ? g.target : g.control;
}

/// Draws one layer against `current`. On success applies it to `current`.
bool try_layer(GchBasis &current, bool final_layer, std::size_t need_marked, PrngStream &stream, Layer &out) {
    const std::size_t n = current.num_qubits();
    std::vector<Qubit> order(n);
    std::iota(order.begin(), order.end(), Qubit{0});
    stream.shuffle(order);

    std::vector<bool> paired(n, false);
    std::vector<CnotGate> gates;
    std::vector<CnotGate> candidates;
    for (Qubit p : order) {
        if (paired[p]) {
            continue;
        }
        candidates.clear();
        for (Qubit q : order) {
            if (q == p || paired[q]) {
                continue;
            }
            for (const CnotGate g : {CnotGate{p, q}, CnotGate{q, p}}) {
                if (is_compatible(current, g.control, g.target) &&
                    (!final_layer || markable(current, g.control, g.target))) {
                    candidates.push_back(g);
                }
            }
        }
        if (candidates.empty()) {
            continue;
        }
        const CnotGate g = candidates[static_cast<std::size_t>(stream.uniform_below(candidates.size()))];
        paired[g.control] = paired[g.target] = true;
        gates.push_back(g);
    }
    if (gates.empty()) {
        return false;
    }
    std::sort(gates.begin(), gates.end());

    GchBasis next = current;
    for (const auto &g : gates) {
        if (!is_compatible(next, g.control, g.target)) {
            return false;
        }
        apply_cnot_in_place(next, g.control, g.target);
    }
    if (final_layer) {
        std::size_t ok = 0;
        for (const auto &g : gates) {
            ok += is_singleton(next.kind(marked_endpoint(next, g)));
        }
        if (ok != gates.size() || ok < need_marked) {
            return false;
        }
    }
    current = std::move(next);
    out.gates = std::move(gates);
    return true;
}

}  // namespace

PrngStream seed_from_basis(const GchBasis &basis) {
    return PrngStream(sha256(canonical_basis_bytes(basis)));
}

ConstituentCircuit sample_constituent_circuit(const GchBasis &basis, PrngStream &stream) {
    const std::size_t n = basis.num_qubits();
    require_owf_size(n);
    const std::size_t depth = n;
    const std::size_t need = n / 2 - 1;

    for (std::size_t attempt = 0; attempt < kCircuitRetries; ++attempt) {
        ConstituentCircuit c;
        GchBasis current = basis;
        bool ok = true;
        for (std::size_t l = 0; l < depth && ok; ++l) {
            const bool final_layer = l + 1 == depth;
            Layer layer;
            ok = false;
            for (std::size_t r = 0; r < kLayerRetries && !ok; ++r) {
                ok = try_layer(current, final_layer, need, stream, layer);
            }
            if (ok) {
                c.layers.push_back(std::move(layer));
            }
        }
        if (!ok) {
            continue;
        }
        // `current` is now the structure after the final layer.
        for (const auto &g : c.layers.back().gates) {
            c.marked.push_back(marked_endpoint(current, g));
        }
        std::sort(c.marked.begin(), c.marked.end());
        std::vector<Qubit> pool = c.marked;
        for (std::size_t i = 0; i < need; ++i) {
            const auto j = i + static_cast<std::size_t>(stream.uniform_below(pool.size() - i));
            std::swap(pool[i], pool[j]);
        }
        c.measured.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(need));
        std::sort(c.measured.begin(), c.measured.end());
        for (Qubit q : c.measured) {
            c.measurement_basis.push_back(current.kind(q) == BasisKind::H ? MeasurementBasis::Hadamard
                                                                          : MeasurementBasis::Computational);
        }
        return c;
    }
    throw SamplingExhausted("no valid constituent circuit for basis " + basis.to_string() + " after " +
                            std::to_string(kCircuitRetries) + " attempts");
}

CircuitFamily sample_circuit_family(const GchBasis &basis, Execution exec) {
    const std::size_t n = basis.num_qubits();
    require_owf_size(n);
    const PrngStream root = seed_from_basis(basis);
    CircuitFamily family;
    family.n = n;
    family.seeding_basis = basis;
    family.circuits.resize(n);

    if (exec == Execution::Serial) {
        for (std::size_t i = 0; i < n; ++i) {
            PrngStream s = root.substream(i);
            family.circuits[i] = sample_constituent_circuit(basis, s);
        }
        return family;
    }

    std::exception_ptr error;
    const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) {
        try {
            PrngStream s = root.substream(static_cast<std::uint64_t>(i));
            family.circuits[static_cast<std::size_t>(i)] = sample_constituent_circuit(basis, s);
        } catch (...) {
#pragma omp critical(gchowf_family_error)
            if (!error) {
                error = std::current_exception();
            }
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
    return family;
}

std::shared_ptr<const CircuitFamily> FamilyCache::get(const GchBasis &basis) {
    auto key = canonical_basis_bytes(basis);
    {
        std::lock_guard lock(mu_);
        auto it = families_.find(key);
        if (it != families_.end()) {
            return it->second;
        }
    }
    // Nested inside a parallel caller, the inner region runs on one thread.
    auto family = std::make_shared<const CircuitFamily>(
        sample_circuit_family(basis, omp_in_parallel() ? Execution::Serial : Execution::Parallel));
    std::lock_guard lock(mu_);
    return families_.try_emplace(std::move(key), std::move(family)).first->second;
}

std::size_t FamilyCache::size() const {
    std::lock_guard lock(mu_);
    return families_.size();
}

void FamilyCache::clear() {
    std::lock_guard lock(mu_);
    families_.clear();
}

FamilyCache &default_family_cache() {
    static FamilyCache cache;
    return cache;
}

}  // namespace gchowf
