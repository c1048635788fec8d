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

#include "gchowf/bitstring.h"

#include <cctype>

#include "gchowf/errors.h"
#include "gchowf/prng.h"

namespace gchowf {

Bitstring Bitstring::from_string(std::string_view s) {
    Bitstring b;
    for (char c : s) {
        if (c != '0' && c != '1') {
            throw InvalidArgument(std::string("bit string contains '") + c + "'");
        }
        b.push_back(c == '1');
    }
    return b;
}

Bitstring Bitstring::from_bytes(std::span<const std::uint8_t> bytes, std::size_t nbits) {
    if (nbits > bytes.size() * 8) {
        throw InvalidArgument("bit count exceeds byte buffer");
    }
    Bitstring b(nbits);
    for (std::size_t i = 0; i < nbits; ++i) {
        b.bits_[i] = (bytes[i / 8] >> (7 - i % 8)) & 1;
    }
    return b;
}

void Bitstring::append(std::uint64_t value, unsigned width) {
    for (unsigned i = width; i-- > 0;) {
        bits_.push_back(static_cast<std::uint8_t>((value >> i) & 1));
    }
}

void Bitstring::append(const Bitstring &other) {
    bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
}

void Bitstring::pad_to_byte() {
    while (bits_.size() % 8) {
        bits_.push_back(0);
    }
}

std::uint64_t Bitstring::read(std::size_t offset, unsigned width) const {
    if (offset + width > bits_.size()) {
        throw InvalidArgument("bit read past end");
    }
    std::uint64_t v = 0;
    for (unsigned i = 0; i < width; ++i) {
        v = (v << 1) | bits_[offset + i];
    }
    return v;
}

Bitstring Bitstring::slice(std::size_t offset, std::size_t count) const {
    if (offset + count > bits_.size()) {
        throw InvalidArgument("bit slice past end");
    }
    Bitstring b;
    b.bits_.assign(bits_.begin() + static_cast<std::ptrdiff_t>(offset),
                   bits_.begin() + static_cast<std::ptrdiff_t>(offset + count));
    return b;
}

std::vector<std::uint8_t> Bitstring::to_bytes() const {
    std::vector<std::uint8_t> out((bits_.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i]) {
            out[i / 8] |= static_cast<std::uint8_t>(0x80u >> (i % 8));
        }
    }
    return out;
}

std::string Bitstring::to_string() const {
    std::string s;
    s.reserve(bits_.size());
    for (auto b : bits_) {
        s.push_back(b ? '1' : '0');
    }
    return s;
}

std::uint64_t BitReader::read(unsigned width) {
    if (bit_ + width > bytes_.size() * 8) {
        throw MalformedCircuitEncoding("unexpected end of input", bytes_.size());
    }
    std::uint64_t v = 0;
    for (unsigned i = 0; i < width; ++i, ++bit_) {
        v = (v << 1) | ((bytes_[bit_ / 8] >> (7 - bit_ % 8)) & 1);
    }
    return v;
}

void BitReader::align() {
    while (bit_ % 8) {
        const std::size_t at = bit_ / 8;
        if (read(1)) {
            throw MalformedCircuitEncoding("nonzero padding bit", at);
        }
    }
}

std::string to_hex_text(std::span<const std::uint8_t> bytes) {
    return "0x" + to_hex(bytes);
}

std::vector<std::uint8_t> parse_hex(std::string_view text) {
    if (text.size() >= 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
        text.remove_prefix(2);
    }
    if (text.size() % 2) {
        throw InvalidArgument("hex string has odd length");
    }
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') {
            return c - '0';
        }
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (c >= 'a' && c <= 'f') {
            return c - 'a' + 10;
        }
        throw InvalidArgument(std::string("non-hex character '") + c + "'");
    };
    std::vector<std::uint8_t> out;
    out.reserve(text.size() / 2);
    for (std::size_t i = 0; i < text.size(); i += 2) {
        out.push_back(static_cast<std::uint8_t>(nibble(text[i]) << 4 | nibble(text[i + 1])));
    }
    return out;
}

unsigned ceil_log2(std::size_t v) {
    unsigned w = 0;
    while ((std::size_t{1} << w) < v) {
        ++w;
    }
    return w;
}

}  // namespace gchowf
