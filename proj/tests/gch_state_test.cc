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

#include "gchowf/gch_state.h"

#include <gtest/gtest.h>

#include <set>

#include "gchowf/enumerate.h"
#include "gchowf/errors.h"

using namespace gchowf;

TEST(GchState, DefaultIsAllZero) {
    GchState s(3);
    EXPECT_EQ(s.to_string(), "0 0 0");
    EXPECT_NO_THROW(s.check_invariants());
}

TEST(GchState, ParsePrintRoundTrip) {
    const std::string fig = "0 1 + - G{5,6}:00 G{7,8,9}:010";
    const auto s = GchState::parse(fig);
    EXPECT_EQ(s.num_qubits(), 9u);
    EXPECT_EQ(s.to_string(), fig);
    ASSERT_EQ(s.blocks().size(), 2u);
    EXPECT_EQ(s.blocks()[1].positions, (std::vector<Qubit>{6, 7, 8}));
    EXPECT_EQ(s.ghz_bit(7), 1);
}

TEST(GchState, BlockBitsAreCanonicalized) {
    // 101 and 010 name the same block; the canonical one starts with 0.
    EXPECT_EQ(GchState::parse("G{1,2,3}:101"), GchState::parse("G{1,2,3}:010"));
    EXPECT_EQ(GchState::parse("G{1,2,3}:101").to_string(), "G{1,2,3}:010");
}

TEST(GchState, BlocksOrderedBySmallestMember) {
    const auto s = GchState::from_parts(
        4, std::vector<QubitLabel>(4), {GhzBlock{{1, 3}, {0, 1}}, GhzBlock{{0, 2}, {1, 1}}});
    EXPECT_EQ(s.to_string(), "G{1,3}:00 G{2,4}:01");
    EXPECT_EQ(s.label(1).block, 1u);
}

TEST(GchState, FromPartsRejectsBadPartitions) {
    EXPECT_THROW(GchState::from_parts(3, std::vector<QubitLabel>(3), {GhzBlock{{0, 3}, {0, 0}}}), InvalidArgument);
    EXPECT_THROW(
        GchState::from_parts(3, std::vector<QubitLabel>(3), {GhzBlock{{0, 1}, {0, 0}}, GhzBlock{{1, 2}, {0, 0}}}),
        InvalidArgument);
}

TEST(GchState, ParseRejectsGarbage) {
    EXPECT_THROW(GchState::parse("0 x"), InvalidArgument);
    EXPECT_THROW(GchState::parse("G{1,2}:0"), InvalidArgument);
    EXPECT_THROW(GchState::parse("G{1,3}:00"), InvalidArgument);
}

TEST(Basis, ErasesValues) {
    EXPECT_EQ(basis_of(GchState::parse("0 0")).to_string(), "C C");
    EXPECT_EQ(basis_of(GchState::parse("0 1 + - G{5,6}:00 G{7,8,9}:010")).to_string(),
              "C C H H G{5,6} G{7,8,9}");
    EXPECT_EQ(basis_of(GchState::parse("+ -")), basis_of(GchState::parse("- -")));
    EXPECT_EQ(basis_of(GchState::parse("G{1,2}:00 1")), basis_of(GchState::parse("G{1,2}:01 0")));
    EXPECT_NE(basis_of(GchState::parse("0 +")), basis_of(GchState::parse("+ 0")));
}

TEST(Basis, CanonicalBytesLayout) {
    const auto bytes = canonical_basis_bytes(basis_of(GchState::parse("0 + G{3,4}:01")));
    EXPECT_EQ(bytes, (std::vector<std::uint8_t>{0, 4, 0, 0, 0, 1, 0, 2, 0, 2}));
    EXPECT_EQ(canonical_basis_bytes(basis_of(GchState(2))), (std::vector<std::uint8_t>{0, 2, 0, 0, 0, 0}));
}

TEST(Basis, CanonicalBytesAreInjective) {
    for (std::size_t n = 1; n <= 5; ++n) {
        std::set<std::vector<std::uint8_t>> seen;
        const auto bases = enumerate_bases(n);
        for (const auto &b : bases) {
            seen.insert(canonical_basis_bytes(b));
        }
        EXPECT_EQ(seen.size(), bases.size()) << "n=" << n;
    }
    EXPECT_EQ(enumerate_bases(2).size(), 5u);
}
