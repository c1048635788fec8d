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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gchowf/bitstring.h"
#include "gchowf/errors.h"
#include "gchowf/gch_state.h"
#include "gchowf/prng.h"

namespace gchowf {

// Binary encoding of a GCH state as the circuit that prepares it:
//
//   [init: n][hadamard: n][cnot_count: ceil_log2(n+1)]
//   [cnot_count x (control: ceil_log2(n), target: ceil_log2(n))]
//
// Positions are 0-based on the wire, fields MSB first, qubit 0 first. Byte
// form zero-pads the last byte. Preparation: |init>, then H where hadamard
// is set, then the CNOTs in order. Valid encodings are in bijection with
// GCH states because of the rules below.

enum class EncodingRule {
    LengthMismatch,
    CountOverflow,       // cnot_count > n - 1
    PositionOutOfRange,  // index >= n
    SelfLoop,            // control == target
    Unsorted,            // pairs not strictly ascending by (control, target)
    ControlNotPlus,      // control must be prepared as |+> (init 0, hadamard 1)
    TargetNotComputational,
    TargetIsControl,
    DuplicateTarget,
    ControlNotSmallest,  // the control must be the smallest position of its block
    NonZeroPadding,
};

std::string_view rule_name(EncodingRule rule);

class InvalidEncoding : public Error {
   public:
    InvalidEncoding(EncodingRule rule, const std::string &detail)
        : Error(std::string(rule_name(rule)) + ": " + detail), rule(rule) {
    }
    EncodingRule rule;
};

struct CnotPair {
    Qubit control;
    Qubit target;
    bool operator==(const CnotPair &) const = default;
    auto operator<=>(const CnotPair &) const = default;
};

struct EncodingLayout {
    explicit EncodingLayout(std::size_t n) : n(n), count_width(ceil_log2(n + 1)), index_width(ceil_log2(n)) {
    }
    std::size_t header_bits() const {
        return 2 * n + count_width;
    }
    std::size_t total_bits(std::size_t cnot_count) const {
        return header_bits() + cnot_count * 2 * index_width;
    }
    std::size_t n;
    unsigned count_width;
    unsigned index_width;
};

/// Parsed fields of an encoding (not yet validated against the rules).
struct StateEncoding {
    std::size_t n = 0;
    Bitstring init_bits;
    Bitstring hadamard_bits;
    std::vector<CnotPair> pairs;

    Bitstring to_bits() const;
};

struct ValidationReport {
    std::optional<EncodingRule> violated;
    std::string detail;

    bool ok() const {
        return !violated.has_value();
    }
    explicit operator bool() const {
        return ok();
    }
};

/// Total; never throws for any bit string and n >= 1.
ValidationReport validate_encoding(const Bitstring &enc, std::size_t n);

/// Throws InvalidEncoding naming the first violated rule.
GchState decode_state(const Bitstring &enc, std::size_t n);
StateEncoding parse_state_encoding(const Bitstring &enc, std::size_t n);

Bitstring encode_state(const GchState &state);

/// Recovers the exact-length bit string from its zero-padded byte form.
/// Throws InvalidEncoding (LengthMismatch / CountOverflow / NonZeroPadding).
Bitstring state_encoding_from_bytes(std::span<const std::uint8_t> bytes, std::size_t n);

struct SampledState {
    Bitstring encoding;
    GchState state;
};

/// Uniform over valid encodings (equivalently over GCH states): draws an index
/// below count_states(n) from the stream and unranks it. TooLarge past
/// kMaxSampledQubits.
inline constexpr std::size_t kMaxSampledQubits = 33;
SampledState sample_uniform_state(std::size_t n, PrngStream &randomness);

}  // namespace gchowf
