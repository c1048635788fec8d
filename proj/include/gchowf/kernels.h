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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gchowf/gch_state.h"

namespace gchowf {

using Amplitude = std::complex<double>;

/// Amplitude index bit that holds qubit q of an n-qubit register. Qubit 0 is
/// the most significant bit, so |q0 q1 ... > reads left to right.
inline std::size_t qubit_mask(std::size_t n, Qubit q) {
    return std::size_t{1} << (n - 1 - q);
}

// Dense kernels in two flavours with identical signatures. `serial` is the
// reference the tests compare against; `parallel` splits the amplitude loop
// across OpenMP threads once the register is large enough to pay for it.
// All take n and a span of exactly 2^n amplitudes.

namespace serial {

void expand_gch(const GchState &state, std::span<Amplitude> out);
void apply_cnot(std::span<Amplitude> amps, std::size_t n, Qubit control, Qubit target);
void apply_hadamard(std::span<Amplitude> amps, std::size_t n, Qubit q);
double probability_one(std::span<const Amplitude> amps, std::size_t n, Qubit q);
/// Zeroes the branch inconsistent with `outcome` and renormalizes.
void collapse(std::span<Amplitude> amps, std::size_t n, Qubit q, bool outcome);
/// <a|b>
Amplitude inner_product(std::span<const Amplitude> a, std::span<const Amplitude> b);
double norm_squared(std::span<const Amplitude> amps);

}  // namespace serial

namespace parallel {

/// Registers below this many amplitudes run single-threaded.
inline constexpr std::size_t kMinParallelAmplitudes = std::size_t{1} << 11;

void expand_gch(const GchState &state, std::span<Amplitude> out);
void apply_cnot(std::span<Amplitude> amps, std::size_t n, Qubit control, Qubit target);
void apply_hadamard(std::span<Amplitude> amps, std::size_t n, Qubit q);
double probability_one(std::span<const Amplitude> amps, std::size_t n, Qubit q);
void collapse(std::span<Amplitude> amps, std::size_t n, Qubit q, bool outcome);
Amplitude inner_product(std::span<const Amplitude> a, std::span<const Amplitude> b);
double norm_squared(std::span<const Amplitude> amps);

}  // namespace parallel

namespace detail {

/// Per-index amplitude of a GCH state, shared by both expand_gch flavours.
struct GchAmplitudeTable {
    explicit GchAmplitudeTable(const GchState &state);
    Amplitude at(std::size_t index) const;

    std::size_t n;
    // Singletons: amplitude when the qubit reads 0 / 1.
    struct Single {
        std::size_t mask;
        Amplitude zero;
        Amplitude one;
    };
    struct Block {
        std::size_t mask;
        std::size_t pattern;
    };
    std::vector<Single> singles;
    std::vector<Block> blocks;
};

}  // namespace detail

}  // namespace gchowf
