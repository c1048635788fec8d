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

#include <omp.h>

#include <cmath>

#include "gchowf/kernels.h"

namespace gchowf::parallel {

namespace {

using Index = std::int64_t;

[[maybe_unused]] bool worth_it(std::size_t size) {
    return size >= kMinParallelAmplitudes;
}

}  // namespace

void expand_gch(const GchState &state, std::span<Amplitude> out) {
    const detail::GchAmplitudeTable table(state);
    const Index size = static_cast<Index>(out.size());
#pragma omp parallel for schedule(static) if (worth_it(out.size()))
    for (Index i = 0; i < size; ++i) {
        out[static_cast<std::size_t>(i)] = table.at(static_cast<std::size_t>(i));
    }
}

void apply_cnot(std::span<Amplitude> amps, std::size_t n, Qubit control, Qubit target) {
    const std::size_t cm = qubit_mask(n, control);
    const std::size_t tm = qubit_mask(n, target);
    const Index size = static_cast<Index>(amps.size());
    // Each (i, i|tm) pair is owned by the iteration with the target bit clear.
#pragma omp parallel for schedule(static) if (worth_it(amps.size()))
    for (Index k = 0; k < size; ++k) {
        const auto i = static_cast<std::size_t>(k);
        if ((i & cm) && !(i & tm)) {
            std::swap(amps[i], amps[i | tm]);
        }
    }
}

void apply_hadamard(std::span<Amplitude> amps, std::size_t n, Qubit q) {
    const double r = 1.0 / std::sqrt(2.0);
    const std::size_t m = qubit_mask(n, q);
    const Index size = static_cast<Index>(amps.size());
#pragma omp parallel for schedule(static) if (worth_it(amps.size()))
    for (Index k = 0; k < size; ++k) {
        const auto i = static_cast<std::size_t>(k);
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
    const Index size = static_cast<Index>(amps.size());
    double p = 0;
#pragma omp parallel for schedule(static) reduction(+ : p) if (worth_it(amps.size()))
    for (Index k = 0; k < size; ++k) {
        const auto i = static_cast<std::size_t>(k);
        if (i & m) {
            p += std::norm(amps[i]);
        }
    }
    return p;
}

void collapse(std::span<Amplitude> amps, std::size_t n, Qubit q, bool outcome) {
    const std::size_t m = qubit_mask(n, q);
    const Index size = static_cast<Index>(amps.size());
    double kept = 0;
#pragma omp parallel for schedule(static) reduction(+ : kept) if (worth_it(amps.size()))
    for (Index k = 0; k < size; ++k) {
        const auto i = static_cast<std::size_t>(k);
        if (static_cast<bool>(i & m) != outcome) {
            amps[i] = 0.0;
        } else {
            kept += std::norm(amps[i]);
        }
    }
    const double scale = 1.0 / std::sqrt(kept);
#pragma omp parallel for schedule(static) if (worth_it(amps.size()))
    for (Index k = 0; k < size; ++k) {
        amps[static_cast<std::size_t>(k)] *= scale;
    }
}

Amplitude inner_product(std::span<const Amplitude> a, std::span<const Amplitude> b) {
    const Index size = static_cast<Index>(a.size());
    double re = 0;
    double im = 0;
#pragma omp parallel for schedule(static) reduction(+ : re, im) if (worth_it(a.size()))
    for (Index k = 0; k < size; ++k) {
        const auto i = static_cast<std::size_t>(k);
        const Amplitude t = std::conj(a[i]) * b[i];
        re += t.real();
        im += t.imag();
    }
    return {re, im};
}

double norm_squared(std::span<const Amplitude> amps) {
    const Index size = static_cast<Index>(amps.size());
    double s = 0;
#pragma omp parallel for schedule(static) reduction(+ : s) if (worth_it(amps.size()))
    for (Index k = 0; k < size; ++k) {
        s += std::norm(amps[static_cast<std::size_t>(k)]);
    }
    return s;
}

}  // namespace gchowf::parallel
