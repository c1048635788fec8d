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

#include "gchowf/state_codec.h"

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>

#include "gchowf/enumerate.h"

using namespace gchowf;

namespace {

// init | hadamard | count | pairs, as written in the layout.
Bitstring layout(const std::string &init, const std::string &had, const std::string &count,
                 const std::string &pairs = "") {
    return Bitstring::from_string(init + had + count + pairs);
}

std::optional<EncodingRule> violated(const Bitstring &b, std::size_t n) {
    return validate_encoding(b, n).violated;
}

const char *kNineQubitLayout =
    "010100010"
    "001110100"
    "0011"
    "0100"
    "0101"
    "0110"
    "0111"
    "0110"
    "1000";

}  // namespace

TEST(StateCodec, NineQubitLayout) {
    const auto bits = Bitstring::from_string(kNineQubitLayout);
    EXPECT_EQ(bits.size(), 46u);
    EXPECT_TRUE(validate_encoding(bits, 9).ok());
    const auto s = decode_state(bits, 9);
    EXPECT_EQ(s.to_string(), "0 1 + - G{5,6}:00 G{7,8,9}:010");
    EXPECT_EQ(encode_state(s), bits);
    EXPECT_EQ(to_hex_text(bits.to_bytes()), "0x511d0d159da0");
    EXPECT_EQ(state_encoding_from_bytes(parse_hex("0x511d0d159da0"), 9), bits);
}

TEST(StateCodec, SmallExamples) {
    EXPECT_EQ(decode_state(layout("00", "00", "00"), 2).to_string(), "0 0");
    EXPECT_EQ(encode_state(GchState(2)), layout("00", "00", "00"));
    // (|01> + |10>)/sqrt2 = CNOT(1->2) H_1 |01>
    const auto ghz = GchState::parse("G{1,2}:01");
    EXPECT_EQ(encode_state(ghz), layout("01", "10", "01", "01"));
    EXPECT_EQ(to_hex_text(encode_state(ghz).to_bytes()), "0x65");
}

TEST(StateCodec, NamedRuleViolations) {
    EXPECT_EQ(violated(layout("00", "01", "01", "10"), 2), EncodingRule::ControlNotSmallest);
    EXPECT_EQ(violated(layout("00", "00", "0"), 2), EncodingRule::LengthMismatch);
    EXPECT_EQ(violated(layout("10", "10", "01", "01"), 2), EncodingRule::ControlNotPlus);
    EXPECT_EQ(violated(layout("00", "00", "01", "01"), 2), EncodingRule::ControlNotPlus);
    EXPECT_EQ(violated(layout("00", "11", "01", "01"), 2), EncodingRule::TargetNotComputational);
    EXPECT_EQ(violated(layout("00", "10", "01", "00"), 2), EncodingRule::SelfLoop);
    EXPECT_EQ(violated(layout("00", "10", "10", "0101"), 2), EncodingRule::CountOverflow);
    EXPECT_EQ(violated(layout("000", "000", "01", "1100"), 3), EncodingRule::PositionOutOfRange);
    EXPECT_EQ(violated(layout("000", "100", "10", "00100001"), 3), EncodingRule::Unsorted);
    // A target that is also a control is already not computational.
    EXPECT_EQ(violated(layout("000", "110", "10", "00010110"), 3), EncodingRule::TargetNotComputational);
    EXPECT_EQ(violated(layout("000", "110", "10", "00100110"), 3), EncodingRule::DuplicateTarget);
    try {
        decode_state(layout("00", "01", "01", "10"), 2);
        FAIL() << "expected InvalidEncoding";
    } catch (const InvalidEncoding &e) {
        EXPECT_EQ(e.rule, EncodingRule::ControlNotSmallest);
        EXPECT_NE(std::string(e.what()).find("ControlNotSmallest"), std::string::npos);
    }
}

TEST(StateCodec, ByteFormChecksPadding) {
    EXPECT_THROW(state_encoding_from_bytes(parse_hex("0x511d0d159da1"), 9), InvalidEncoding);
    EXPECT_THROW(state_encoding_from_bytes(parse_hex("0x511d0d159d"), 9), InvalidEncoding);
}

TEST(StateCodec, LayoutLength) {
    for (std::size_t n = 1; n <= 16; ++n) {
        const EncodingLayout l(n);
        EXPECT_EQ(l.count_width, ceil_log2(n + 1));
        EXPECT_EQ(l.total_bits(n - 1), 2 * n + ceil_log2(n + 1) + (n - 1) * 2 * ceil_log2(n));
    }
}

// Exhaustive bijection: every state round-trips, and the valid encodings
// found by brute force over raw layouts are exactly the encoded states.
TEST(StateCodec, BijectionUpToThreeQubits) {
    for (std::size_t n = 1; n <= 3; ++n) {
        std::set<Bitstring> encoded;
        for (const auto &s : enumerate_states(n)) {
            const auto e = encode_state(s);
            ASSERT_TRUE(validate_encoding(e, n).ok()) << s.to_string();
            ASSERT_EQ(decode_state(e, n), s);
            encoded.insert(e);
        }
        EXPECT_EQ(encoded.size(), count_states(n));

        const EncodingLayout l(n);
        std::size_t valid = 0;
        for (std::size_t count = 0; count < n; ++count) {
            const std::size_t width = l.total_bits(count);
            for (std::uint64_t raw = 0; raw < (std::uint64_t{1} << width); ++raw) {
                Bitstring b;
                b.append(raw, static_cast<unsigned>(width));
                if (b.read(2 * n, l.count_width) != count || !validate_encoding(b, n).ok()) {
                    continue;
                }
                ++valid;
                EXPECT_TRUE(encoded.count(b)) << b.to_string();
                EXPECT_EQ(encode_state(decode_state(b, n)), b);
            }
        }
        EXPECT_EQ(valid, count_states(n)) << "n=" << n;
    }
}

TEST(StateCodec, UniformSamplingSingleQubit) {
    auto rng = PrngStream::from_u64(17);
    std::map<std::string, int> hist;
    const int draws = 10000;
    for (int i = 0; i < draws; ++i) {
        const auto s = sample_uniform_state(1, rng);
        ASSERT_TRUE(validate_encoding(s.encoding, 1).ok());
        ASSERT_EQ(decode_state(s.encoding, 1), s.state);
        ++hist[s.state.to_string()];
    }
    ASSERT_EQ(hist.size(), 4u);
    const double sigma = std::sqrt(draws * 0.25 * 0.75);
    for (const auto &[k, v] : hist) {
        EXPECT_NEAR(v, draws / 4.0, 3 * sigma) << k;
    }
}

TEST(StateCodec, UniformSamplingCoversTwoQubits) {
    auto rng = PrngStream::from_u64(18);
    std::set<std::string> seen;
    for (int i = 0; i < 10000; ++i) {
        seen.insert(sample_uniform_state(2, rng).state.to_string());
    }
    EXPECT_EQ(seen.size(), 18u);
}

TEST(StateCodec, UniformSamplingCap) {
    auto rng = PrngStream::from_u64(19);
    EXPECT_NO_THROW(sample_uniform_state(kMaxSampledQubits, rng));
    EXPECT_THROW(sample_uniform_state(kMaxSampledQubits + 1, rng), TooLarge);
}
