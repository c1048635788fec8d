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

#include <gtest/gtest.h>

#include "gchowf/errors.h"

using namespace gchowf;

TEST(Bitstring, AppendIsMsbFirst) {
    Bitstring b;
    b.append(0b101, 3);
    b.append(0b01, 2);
    EXPECT_EQ(b.to_string(), "10101");
    EXPECT_EQ(b.read(0, 3), 0b101u);
    EXPECT_EQ(b.read(2, 3), 0b101u);
}

TEST(Bitstring, BytesZeroPadTheTail) {
    const auto b = Bitstring::from_string("0110010111");
    const auto bytes = b.to_bytes();
    ASSERT_EQ(bytes.size(), 2u);
    EXPECT_EQ(bytes[0], 0x65);
    EXPECT_EQ(bytes[1], 0xC0);
    EXPECT_EQ(Bitstring::from_bytes(bytes, 10), b);
}

TEST(Bitstring, FromStringRejectsOtherCharacters) {
    EXPECT_THROW(Bitstring::from_string("01x"), InvalidArgument);
}

TEST(Bitstring, SliceAndPad) {
    auto b = Bitstring::from_string("111");
    b.pad_to_byte();
    EXPECT_EQ(b.to_string(), "11100000");
    EXPECT_EQ(b.slice(1, 3).to_string(), "110");
}

TEST(BitReader, ReadsAlignsAndReportsOffsets) {
    const std::vector<std::uint8_t> bytes{0xA5, 0x80};
    BitReader r(bytes);
    EXPECT_EQ(r.read(4), 0xAu);
    EXPECT_EQ(r.read(4), 0x5u);
    EXPECT_EQ(r.byte_offset(), 1u);
    EXPECT_TRUE(r.read_bit());
    r.align();
    EXPECT_TRUE(r.at_end());
    EXPECT_THROW(r.read(1), MalformedCircuitEncoding);
}

TEST(BitReader, AlignRejectsNonzeroPadding) {
    const std::vector<std::uint8_t> bytes{0x81};
    BitReader r(bytes);
    r.read(1);
    EXPECT_THROW(r.align(), MalformedCircuitEncoding);
}

TEST(Hex, RoundTrip) {
    const std::vector<std::uint8_t> bytes{0x51, 0x1d, 0x0d, 0x15, 0x9d, 0xa0};
    EXPECT_EQ(to_hex_text(bytes), "0x511d0d159da0");
    EXPECT_EQ(parse_hex("0x511D0D159DA0"), bytes);
    EXPECT_EQ(parse_hex("511d0d159da0"), bytes);
    EXPECT_THROW(parse_hex("0x123"), InvalidArgument);
    EXPECT_THROW(parse_hex("0xzz"), InvalidArgument);
}

TEST(CeilLog2, SmallValues) {
    EXPECT_EQ(ceil_log2(0), 0u);
    EXPECT_EQ(ceil_log2(1), 0u);
    EXPECT_EQ(ceil_log2(2), 1u);
    EXPECT_EQ(ceil_log2(3), 2u);
    EXPECT_EQ(ceil_log2(4), 2u);
    EXPECT_EQ(ceil_log2(5), 3u);
    EXPECT_EQ(ceil_log2(9), 4u);
    EXPECT_EQ(ceil_log2(10), 4u);
}
