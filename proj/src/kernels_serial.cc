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

#include <cmath>

#include "gchowf/kernels.h"

namespace gchowf {

namespace detail {

GchAmplitudeTable::GchAmplitudeTable(const GchState &state) : n(state.num_qubits()) {
    const double r = 1.0 / std::sqrt(2.0);
    for (Qubit q = 0; q < n; ++q) {
        const auto kind = state.label(q).kind;
        const std::size_t m = qubit_mask(n, q);
        switch (kind) {
            case QubitKind::C0:
                singles.push_back({m, 1.0, 0.0});
                break;
            case QubitKind::C1:
                singles.push_back({m, 0.0, 1.0});
                break;
            case QubitKind::HPlus:
                singles.push_back({m, r, r});
                break;
            case QubitKind::HMinus:
                singles.push_back({m, r, -r});
                break;
            case QubitKind::Ghz:
                break;
        }
    }
    for (const auto &blk : state.blocks()) {
        Block b{0, 0};
        for (std::size_t i = 0; i < blk.positions.size(); ++i) {
            const std::size_t m = qubit_mask(n, blk.positions[i]);
            b.mask |= m;
            if (blk.bits[i]) {
                b.pattern |= m;
            }
        }
        blocks.push_back(b);
    }
}

Amplitude GchAmplitudeTable::at(std::size_t index) const {
    static const double r = 1.0 / std::sqrt(2.0);
    Amplitude a = 1.0;
    for (const auto &b : blocks) {
        const std::size_t v = index & b.mask;
        if (v != b.pattern && v != (b.pattern ^ b.mask)) {
            return 0.0;
        }
        a *= r;
    }
    for (const auto &s : singles) {
        a *= (index & s.mask) ? s.one : s.zero;
    }
    return a;
}

}  // namespace detail

namespace serial {

void expand_gch(const GchState &state, std::span<Amplitude> out) {
    detail::GchAmplitudeTable table(state);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = table.at(i);
    }
}

void apply_cnot(std::span<Amplitude> amps, std::size_t n, Qubit control, Qubit target) {
    const std::size_t cm = qubit_mask(n, control);
    const std::size_t tm = qubit_mask(n, target);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & cm) && !(i & tm)) {
            std::swap(amps[i], amps[i | tm]);
        }
    }
}

void apply_hadamard(std::span<Amplitude> amps, std::size_t n, Qubit q) {
    const double r = 1.0 / std::sqrt(2.0);
    const std::size_t m = qubit_mask(n, q);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (!(i & m)) {
            const Amplitude a0 = amps[i];
            const Amplitude a1 = amps[i | m];
            amps[i] = r * (a0 + a1);
            amps[i | m] = r * (a0 - a1);
        }
    }
}

double probability_one(std::span<const Amplitude> amps, std::size_t n, Qubit q) {
    const std::size_t m = qubit_mask(n, q);
    double p = 0;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (i & m) {
            p += std::norm(amps[i]);
        }
    }
    return p;
}

void collapse(std::span<Amplitude> amps, std::size_t n, Qubit q, bool outcome) {
    const std::size_t m = qubit_mask(n, q);
    double kept = 0;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (static_cast<bool>(i & m) != outcome) {
            amps[i] = 0.0;
        } else {
            kept += std::norm(amps[i]);
        }
    }
    const double scale = 1.0 / std::sqrt(kept);
    for (auto &a : amps) {
        a *= scale;
    }
}

Amplitude inner_product(std::span<const Amplitude> a, std::span<const Amplitude> b) {
    Amplitude s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += std::conj(a[i]) * b[i];
    }
    return s;
}

double norm_squared(std::span<const Amplitude> amps) {
    double s = 0;
    for (const auto &a : amps) {
        s += std::norm(a);
    }
    return s;
}

}  // namespace serial

}  // namespace gchowf
