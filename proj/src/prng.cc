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

#include "gchowf/prng.h"

#include <openssl/evp.h>
#include <openssl/sha.h>

#include <bit>
#include <stdexcept>

#include "gchowf/errors.h"

namespace gchowf {

Digest sha256(std::span<const std::uint8_t> data) {
    Digest out{};
    SHA256(data.data(), data.size(), out.data());
    return out;
}

std::string to_hex(std::span<const std::uint8_t> bytes) {
    static const char *digits = "0123456789abcdef";
    std::string s;
    s.reserve(bytes.size() * 2);
    for (auto b : bytes) {
        s.push_back(digits[b >> 4]);
        s.push_back(digits[b & 15]);
    }
    return s;
}

namespace {

void put_le64(std::uint8_t *out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
        out[i] = static_cast<std::uint8_t>(v >> (8 * i));
    }
}

}  // namespace

/// An EVP context positioned at `next_block`; advancing sequentially avoids
/// re-keying for every 64 bytes.
struct PrngStream::Cipher {
    struct Free {
        void operator()(EVP_CIPHER_CTX *c) const {
            EVP_CIPHER_CTX_free(c);
        }
    };
    std::unique_ptr<EVP_CIPHER_CTX, Free> ctx;
    std::uint64_t next_block = 0;

    Cipher(const Digest &key, std::uint64_t block) : ctx(EVP_CIPHER_CTX_new()), next_block(block) {
        if (!ctx) {
            throw std::runtime_error("EVP_CIPHER_CTX_new failed");
        }
        if (block > UINT32_MAX) {
            throw Error("ChaCha20 stream exhausted (32-bit block counter)");
        }
        // OpenSSL's 16-byte ChaCha20 IV is the little-endian 32-bit block
        // counter followed by the 96-bit nonce (all zero here).
        std::uint8_t iv[16] = {};
        for (int i = 0; i < 4; ++i) {
            iv[i] = static_cast<std::uint8_t>(block >> (8 * i));
        }
        if (EVP_EncryptInit_ex(ctx.get(), EVP_chacha20(), nullptr, key.data(), iv) != 1) {
            throw std::runtime_error("EVP_EncryptInit_ex(chacha20) failed");
        }
    }

    void next(std::array<std::uint8_t, 64> &out) {
        static const std::uint8_t zeros[64] = {};
        int len = 0;
        if (EVP_EncryptUpdate(ctx.get(), out.data(), &len, zeros, 64) != 1 || len != 64) {
            throw std::runtime_error("EVP_EncryptUpdate(chacha20) failed");
        }
        ++next_block;
    }
};

PrngStream::PrngStream(const Digest &key, std::uint64_t position) : key_(key), pos_(position) {
}

PrngStream PrngStream::from_u64(std::uint64_t seed) {
    std::uint8_t le[8];
    put_le64(le, seed);
    return PrngStream(sha256(le));
}

PrngStream::PrngStream(const PrngStream &other) : key_(other.key_), pos_(other.pos_) {
}

PrngStream &PrngStream::operator=(const PrngStream &other) {
    if (this != &other) {
        key_ = other.key_;
        pos_ = other.pos_;
        loaded_block_ = UINT64_MAX;
        cipher_.reset();
    }
    return *this;
}

PrngStream::PrngStream(PrngStream &&) noexcept = default;
PrngStream &PrngStream::operator=(PrngStream &&) noexcept = default;
PrngStream::~PrngStream() = default;

PrngStream PrngStream::substream(std::uint64_t index) const {
    std::uint8_t buf[40];
    std::copy(key_.begin(), key_.end(), buf);
    put_le64(buf + 32, index);
    return PrngStream(sha256(buf));
}

void PrngStream::load_block(std::uint64_t block_index) {
    if (!cipher_ || cipher_->next_block != block_index) {
        cipher_ = std::make_unique<Cipher>(key_, block_index);
    }
    cipher_->next(block_);
    loaded_block_ = block_index;
}

void PrngStream::fill(std::span<std::uint8_t> out) {
    for (auto &b : out) {
        b = next_byte();
    }
}

std::vector<std::uint8_t> PrngStream::next_bytes(std::size_t count) {
    std::vector<std::uint8_t> out(count);
    fill(out);
    return out;
}

std::uint8_t PrngStream::next_byte() {
    const std::uint64_t block = pos_ / 64;
    if (block != loaded_block_) {
        load_block(block);
    }
    return block_[pos_++ % 64];
}

std::uint64_t PrngStream::next_u64() {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) {
        v = (v << 8) | next_byte();
    }
    return v;
}

std::uint64_t PrngStream::uniform_below(std::uint64_t m) {
    if (m == 0) {
        throw InvalidArgument("uniform_below(0)");
    }
    if (m == 1) {
        return 0;
    }
    const int bits = std::bit_width(m - 1);
    const int nbytes = (bits + 7) / 8;
    const unsigned __int128 range = static_cast<unsigned __int128>(1) << (8 * nbytes);
    const unsigned __int128 limit = range - range % m;
    while (true) {
        std::uint64_t v = 0;
        for (int i = 0; i < nbytes; ++i) {
            v = (v << 8) | next_byte();
        }
        if (v < limit) {
            return v % m;
        }
    }
}

double PrngStream::uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

}  // namespace gchowf
