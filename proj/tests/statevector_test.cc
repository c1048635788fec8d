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

#include "gchowf/statevector.h"

#include <gtest/gtest.h>

#include <cmath>

#include "gchowf/errors.h"
#include "gchowf/kernels.h"
#include "gchowf/prng.h"
#include "gchowf/state_codec.h"

using namespace gchowf;

namespace {

const double kR = 1.0 / std::sqrt(2.0);

void expect_amps(const Statevector &v, const std::vector<Amplitude> &want) {
    ASSERT_EQ(v.dimension(), want.size());
    for (std::size_t i = 0; i < want.size(); ++i) {
        EXPECT_NEAR(std::abs(v[i] - want[i]), 0.0, 1e-12) << "i=" << i;
    }
}

std::vector<Amplitude> random_amplitudes(std::size_t n, PrngStream &rng) {
    std::vector<Amplitude> a(std::size_t{1} << n);
    for (auto &x : a) {
        x = {rng.uniform01() - 0.5, rng.uniform01() - 0.5};
    }
    return a;
}

}  // namespace

TEST(Statevector, SingleQubitStates) {
    expect_amps(to_statevector(GchState::parse("0")), {1.0, 0.0});
    expect_amps(to_statevector(GchState::parse("1")), {0.0, 1.0});
    expect_amps(to_statevector(GchState::parse("+")), {kR, kR});
    expect_amps(to_statevector(GchState::parse("-")), {kR, -kR});
}

TEST(Statevector, QubitZeroIsMostSignificant) {
    expect_amps(to_statevector(GchState::parse("1 0")), {0.0, 0.0, 1.0, 0.0});
    expect_amps(to_statevector(GchState::parse("G{1,2}:01")), {0.0, kR, kR, 0.0});
}

TEST(Statevector, GhzThreeBlock) {
    const auto v = to_statevector(GchState::parse("G{1,2,3}:010"));
    for (std::size_t i = 0; i < 8; ++i) {
        EXPECT_NEAR(std::abs(v[i]), (i == 2 || i == 5) ? kR : 0.0, 1e-12);
    }
    EXPECT_NEAR(v.norm_squared(), 1.0, 1e-12);
}

TEST(Statevector, CapIsEnforced) {
    EXPECT_THROW(to_statevector(GchState(15)), TooLarge);
    EXPECT_NO_THROW(to_statevector(GchState(15), 15));
}

TEST(Statevector, GatesAndMeasurement) {
    auto v = Statevector::basis_state(2, 0);
    v.apply_hadamard(0);
    v.apply_cnot(0, 1);
    EXPECT_TRUE(equal_up_to_phase(v, to_statevector(GchState::parse("G{1,2}:00"))));
    EXPECT_NEAR(v.probability_one(1), 0.5, 1e-12);
    v.collapse(1, true);
    expect_amps(v, {0.0, 0.0, 0.0, 1.0});
}

TEST(Statevector, PhaseEquality) {
    const auto a = to_statevector(GchState::parse("- 1"));
    auto b = a;
    for (auto &x : b.amplitudes()) {
        x *= Amplitude(0.0, -1.0);
    }
    EXPECT_TRUE(equal_up_to_phase(a, b));
    EXPECT_FALSE(equal_up_to_phase(a, to_statevector(GchState::parse("+ 1"))));
    EXPECT_NEAR(std::abs(inner_product(a, b)), 1.0, 1e-12);
    EXPECT_THROW(inner_product(a, Statevector(3)), DimensionMismatch);
}

// The OpenMP kernels must agree exactly with the serial reference, including
// above the size where they actually go parallel.
TEST(Kernels, ParallelMatchesSerial) {
    PrngStream rng = PrngStream::from_u64(11);
    for (std::size_t n : {3u, 8u, 12u, 14u}) {
        const auto base = random_amplitudes(n, rng);
        for (Qubit q = 0; q < n; q += 3) {
            auto a = base;
            auto b = base;
            const Qubit t = (q + 1) % n;
            serial::apply_cnot(a, n, q, t);
            parallel::apply_cnot(b, n, q, t);
            serial::apply_hadamard(a, n, t);
            parallel::apply_hadamard(b, n, t);
            EXPECT_EQ(a, b);
            EXPECT_EQ(serial::probability_one(a, n, q), parallel::probability_one(b, n, q));
            serial::collapse(a, n, q, true);
            parallel::collapse(b, n, q, true);
            EXPECT_EQ(a, b);
            const auto ia = serial::inner_product(a, base);
            const auto ib = parallel::inner_product(b, base);
            EXPECT_NEAR(std::abs(ia - ib), 0.0, 1e-12);
            EXPECT_NEAR(serial::norm_squared(a), parallel::norm_squared(b), 1e-12);
        }
        const GchState s = sample_uniform_state(n, rng).state;
        std::vector<Amplitude> ea(std::size_t{1} << n);
        std::vector<Amplitude> eb(ea.size());
        serial::expand_gch(s, ea);
        parallel::expand_gch(s, eb);
        EXPECT_EQ(ea, eb);
    }
}
