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
#include <string>
#include <string_view>
#include <vector>

namespace gchowf {

/// Qubit positions are 0-based everywhere in the API. Text and wire formats
/// that show positions to people print them 1-based.
using Qubit = std::uint32_t;

enum class QubitKind : std::uint8_t { C0, C1, HPlus, HMinus, Ghz };

inline bool is_computational(QubitKind k) {
    return k == QubitKind::C0 || k == QubitKind::C1;
}
inline bool is_hadamard(QubitKind k) {
    return k == QubitKind::HPlus || k == QubitKind::HMinus;
}

struct QubitLabel {
    QubitKind kind = QubitKind::C0;
    /// Index into GchState::blocks(); meaningful only when kind == Ghz.
    std::uint32_t block = 0;

    static QubitLabel ghz(std::uint32_t block) {
        return {QubitKind::Ghz, block};
    }
    bool operator==(const QubitLabel &) const = default;
};

/// (|x> + |~x>)/sqrt(2) on `positions`. `bits[i]` is the value of x at
/// `positions[i]`; canonical blocks have bits[0] == 0.
struct GhzBlock {
    std::vector<Qubit> positions;
    std::vector<std::uint8_t> bits;

    bool operator==(const GhzBlock &) const = default;
};

/// A product of computational singletons, Hadamard singletons and GHZ blocks.
///
/// Values are always canonical: block positions ascend, each block's first bit
/// is 0, blocks are ordered by their smallest member, and every label refers
/// to the block that contains it. Two GchState values are equal iff they
/// describe the same state up to global phase.
class GchState {
   public:
    GchState() = default;

    /// n qubits, all |0>.
    explicit GchState(std::size_t n);

    /// Builds from raw parts; blocks may be in any order and any representative
    /// of {x, ~x}. Singleton labels are given per position; labels at block
    /// positions are ignored and rewritten. Size-1 blocks become |+>.
    /// Throws InvalidArgument if the positions do not partition 0..n-1.
    static GchState from_parts(std::size_t n, std::vector<QubitLabel> labels, std::vector<GhzBlock> blocks);

    /// Product state from glyphs "0", "1", "+", "-" (one char per qubit).
    static GchState product(std::string_view glyphs);

    /// Parses the pretty format produced by to_string().
    static GchState parse(std::string_view text);

    std::size_t num_qubits() const {
        return labels_.size();
    }
    const std::vector<QubitLabel> &labels() const {
        return labels_;
    }
    const QubitLabel &label(Qubit q) const {
        return labels_[q];
    }
    const std::vector<GhzBlock> &blocks() const {
        return blocks_;
    }
    const GhzBlock &block_of(Qubit q) const {
        return blocks_[labels_[q].block];
    }
    /// Value of x at q within its block's canonical representative.
    std::uint8_t ghz_bit(Qubit q) const;

    bool operator==(const GchState &) const = default;

    /// `0 1 + - G{5,6}:00 G{7,8,9}:010` with 1-based positions. Tokens appear in
    /// order of their smallest position.
    std::string to_string() const;

    /// Throws std::logic_error if an invariant is broken. Used by tests.
    void check_invariants() const;

   private:
    friend class SymbolicEditor;
    void canonicalize();

    std::vector<QubitLabel> labels_;
    std::vector<GhzBlock> blocks_;
};

enum class BasisKind : std::uint8_t { C, H, Ghz };

/// A GchState with values erased: which positions are computational,
/// which are Hadamard, and how the rest group into GHZ blocks.
class GchBasis {
   public:
    struct Slot {
        BasisKind kind = BasisKind::C;
        std::uint32_t block = 0;
        bool operator==(const Slot &) const = default;
    };

    GchBasis() = default;
    /// Throws InvalidArgument unless the parts form a canonical basis.
    GchBasis(std::vector<Slot> slots, std::vector<std::vector<Qubit>> blocks);

    std::size_t num_qubits() const {
        return slots_.size();
    }
    const std::vector<Slot> &slots() const {
        return slots_;
    }
    BasisKind kind(Qubit q) const {
        return slots_[q].kind;
    }
    const std::vector<std::vector<Qubit>> &blocks() const {
        return blocks_;
    }
    const std::vector<Qubit> &block_of(Qubit q) const {
        return blocks_[slots_[q].block];
    }

    bool operator==(const GchBasis &) const = default;

    /// Like GchState::to_string but with `C`, `H` and `G{...}` tokens.
    std::string to_string() const;

   private:
    friend class SymbolicEditor;
    void canonicalize();

    std::vector<Slot> slots_;
    std::vector<std::vector<Qubit>> blocks_;
};

GchBasis basis_of(const GchState &state);

/// Injective, platform-independent serialization used as PRNG seed material:
/// [n: u16 BE] then per position a u16 BE code (0 = C, 1 = H, 2 + k = member
/// of block k in canonical order).
std::vector<std::uint8_t> canonical_basis_bytes(const GchBasis &basis);

}  // namespace gchowf
