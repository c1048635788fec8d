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

#include "gchowf/swap_test.h"

#include <gtest/gtest.h>

#include <cmath>

#include "gchowf/errors.h"

using namespace gchowf;

namespace {

GchState st(const char *s) {
    return GchState::parse(s);
}

}  // namespace

TEST(InnerProduct, Examples) {
    EXPECT_NEAR(std::abs(inner_product(st("0"), st("+")) - 1.0 / std::sqrt(2.0)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(inner_product(st("G{1,2}:00"), st("G{1,2}:01"))), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(inner_product(st("0 1 + - G{5,6}:00 G{7,8,9}:010"), st("0 1 + - G{5,6}:00 G{7,8,9}:010"))),
                1.0, 1e-12);
    EXPECT_NEAR(std::abs(inner_product(st("+ -"), st("- -"))), 0.0, 1e-12);
}

// The block-aligned fast path must agree with the dense one.
TEST(InnerProduct, MixedPartitionsUseDensePath) {
    const auto a = st("G{1,2}:00 +");
    const auto b = st("+ G{2,3}:00");
    EXPECT_NEAR(std::abs(inner_product(a, b)), 0.5, 1e-12);
    EXPECT_THROW(inner_product(st("G{1,2}:00 0 0 0 0 0 0 0 0 0 0 0 0 0"), st("0 G{2,3}:00 0 0 0 0 0 0 0 0 0 0 0 0")), TooLarge);
    EXPECT_NEAR(std::abs(inner_product(GchState(40), GchState(40))), 1.0, 1e-12);
}

TEST(SwapTest, PassProbabilities) {
    EXPECT_NEAR(swap_test_pass_probability(st("0"), st("0")), 1.0, 1e-12);
    EXPECT_NEAR(swap_test_pass_probability(st("0"), st("1")), 0.5, 1e-12);
    EXPECT_NEAR(swap_test_pass_probability(st("0"), st("+")), 0.75, 1e-12);
}

TEST(SwapTest, IdenticalStatesAlwaysPass) {
    auto rng = PrngStream::from_u64(1);
    for (int i = 0; i < 200; ++i) {
        EXPECT_TRUE(swap_test(st("+ G{2,3}:01"), st("+ G{2,3}:01"), 20, rng));
    }
}

TEST(SwapTest, EmpiricalRateWithinThreeSigma) {
    auto rng = PrngStream::from_u64(2);
    const int trials = 20000;
    int pass = 0;
    for (int i = 0; i < trials; ++i) {
        pass += swap_test(st("0"), st("+"), 1, rng);
    }
    const double p = 0.75;
    EXPECT_NEAR(pass / double(trials), p, 3 * std::sqrt(p * (1 - p) / trials));
}

TEST(SwapTest, RejectsZeroRepetitions) {
    auto rng = PrngStream::from_u64(3);
    EXPECT_THROW(swap_test(st("0"), st("0"), 0, rng), InvalidArgument);
}
