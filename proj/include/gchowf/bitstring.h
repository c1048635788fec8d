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
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gchowf {

/// Ordered bits with an exact length. Multi-bit fields are written and read
/// most-significant bit first; byte conversion packs MSB-first and zero-pads
/// the final byte.
class Bitstring {
   public:
    Bitstring() = default;
    explicit Bitstring(std::size_t nbits) : bits_(nbits, 0) {
    }
    /// From '0'/'1' characters; throws InvalidArgument otherwise.
    static Bitstring from_string(std::string_view s);
    static Bitstring from_bytes(std::span<const std::uint8_t> bytes, std::size_t nbits);

    std::size_t size() const {
        return bits_.size();
    }
    bool empty() const {
        return bits_.empty();
    }
    bool operator[](std::size_t i) const {
        return bits_[i] != 0;
    }
    void set(std::size_t i, bool v) {
        bits_[i] = v;
    }
    void push_back(bool v) {
        bits_.push_back(v);
    }
    void append(std::uint64_t value, unsigned width);
    void append(const Bitstring &other);
    /// Pads with zeros to the next multiple of 8.
    void pad_to_byte();

    /// `width` bits starting at `offset`, MSB first.
    std::uint64_t read(std::size_t offset, unsigned width) const;
    Bitstring slice(std::size_t offset, std::size_t count) const;

    std::vector<std::uint8_t> to_bytes() const;
    std::string to_string() const;

    bool operator==(const Bitstring &) const = default;
    auto operator<=>(const Bitstring &) const = default;

   private:
    std::vector<std::uint8_t> bits_;
};

/// Cursor over a byte buffer for the byte-aligned wire formats. Reads past the
/// end throw MalformedCircuitEncoding with the offending byte offset.
class BitReader {
   public:
    explicit BitReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {
    }
    std::uint64_t read(unsigned width);
    bool read_bit() {
        return read(1) != 0;
    }
    /// Skips to the next byte boundary; the skipped bits must be zero.
    void align();
    std::size_t byte_offset() const {
        return bit_ / 8;
    }
    bool at_end() const {
        return bit_ >= bytes_.size() * 8;
    }

   private:
    std::span<const std::uint8_t> bytes_;
    std::size_t bit_ = 0;
};

/// "0x" followed by lowercase hex digits.
std::string to_hex_text(std::span<const std::uint8_t> bytes);
/// Accepts an optional 0x/0X prefix; throws InvalidArgument on odd length or
/// non-hex characters.
std::vector<std::uint8_t> parse_hex(std::string_view text);

/// Smallest w with 2^w >= v (0 for v <= 1).
unsigned ceil_log2(std::size_t v);

}  // namespace gchowf
