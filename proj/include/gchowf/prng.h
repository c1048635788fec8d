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

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace gchowf {

using Digest = std::array<std::uint8_t, 32>;

Digest sha256(std::span<const std::uint8_t> data);
std::string to_hex(std::span<const std::uint8_t> bytes);

/// Deterministic byte stream: the ChaCha20 keystream (RFC 8439 block
/// function, zero nonce, block counter from 0) under a 32-byte key.
///
/// Every draw is defined in terms of whole bytes so results are identical
/// across platforms:
///   - next_u64: 8 bytes, big-endian.
///   - uniform_below(m): the fewest bytes that can hold m-1, big-endian,
///     rejected while >= the largest multiple of m, then reduced mod m.
///     uniform_below(1) consumes nothing.
///   - uniform01: next_u64() >> 11 scaled by 2^-53.
class PrngStream {
   public:
    explicit PrngStream(const Digest &key, std::uint64_t position = 0);
    /// key = SHA-256(little-endian 64-bit seed).
    static PrngStream from_u64(std::uint64_t seed);

    PrngStream(const PrngStream &other);
    PrngStream &operator=(const PrngStream &other);
    PrngStream(PrngStream &&) noexcept;
    PrngStream &operator=(PrngStream &&) noexcept;
    ~PrngStream();

    /// Independent stream keyed by SHA-256(key || little-endian 64-bit index).
    PrngStream substream(std::uint64_t index) const;

    const Digest &key() const {
        return key_;
    }
    std::uint64_t position() const {
        return pos_;
    }

    void fill(std::span<std::uint8_t> out);
    std::vector<std::uint8_t> next_bytes(std::size_t count);
    std::uint8_t next_byte();
    std::uint64_t next_u64();
    std::uint64_t uniform_below(std::uint64_t m);
    double uniform01();
    bool bernoulli(double p) {
        return uniform01() < p;
    }

    /// Fisher-Yates, last index first.
    template <typename T>
    void shuffle(std::vector<T> &items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(uniform_below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

   private:
    struct Cipher;
    void load_block(std::uint64_t block_index);

    Digest key_;
    std::uint64_t pos_ = 0;
    std::array<std::uint8_t, 64> block_{};
    std::uint64_t loaded_block_ = UINT64_MAX;
    std::unique_ptr<Cipher> cipher_;
};

}  // namespace gchowf
