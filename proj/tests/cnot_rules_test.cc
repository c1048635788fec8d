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

#include "gchowf/cnot_rules.h"

#include <gtest/gtest.h>

#include "gchowf/enumerate.h"
#include "gchowf/errors.h"
#include "gchowf/prng.h"
#include "gchowf/state_codec.h"
#include "gchowf/statevector.h"
#include "oracles.h"

using namespace gchowf;

namespace {

GchState cnot(const std::string &s, Qubit c, Qubit t) {
    return apply_cnot_symbolic(GchState::parse(s), c, t);
}

bool allowed(const std::string &s, Qubit c, Qubit t) {
    return is_compatible(GchState::parse(s), c, t);
}

Statevector dense_cnot(const GchState &s, Qubit c, Qubit t) {
    auto v = to_statevector(s);
    v.apply_cnot(c, t);
    return v;
}

}  // namespace

TEST(CnotRules, ComputationalControl) {
    EXPECT_EQ(cnot("0 1", 0, 1).to_string(), "0 1");
    EXPECT_EQ(cnot("1 1", 0, 1).to_string(), "1 0");
    EXPECT_EQ(cnot("1 -", 0, 1).to_string(), "1 -");
    EXPECT_EQ(cnot("1 G{2,3}:00", 0, 2).to_string(), "1 G{2,3}:01");
    EXPECT_EQ(cnot("0 G{2,3}:00", 0, 1).to_string(), "0 G{2,3}:00");
}

TEST(CnotRules, HadamardControl) {
    EXPECT_EQ(cnot("+ 0", 0, 1).to_string(), "G{1,2}:00");
    EXPECT_EQ(cnot("+ 1", 0, 1).to_string(), "G{1,2}:01");
    EXPECT_FALSE(allowed("- 0", 0, 1));
    EXPECT_EQ(cnot("+ -", 0, 1).to_string(), "- -");
    EXPECT_EQ(cnot("- -", 0, 1).to_string(), "+ -");
    EXPECT_EQ(cnot("- +", 0, 1).to_string(), "- +");
    EXPECT_FALSE(allowed("+ G{2,3}:00", 0, 1));
}

TEST(CnotRules, GhzControl) {
    EXPECT_EQ(cnot("G{1,2}:01 1", 0, 2).to_string(), "G{1,2,3}:011");
    EXPECT_EQ(cnot("G{1,2}:01 1", 1, 2).to_string(), "G{1,2,3}:010");
    EXPECT_EQ(cnot("G{1,2}:00 +", 0, 2).to_string(), "G{1,2}:00 +");
    EXPECT_FALSE(allowed("G{1,2}:00 -", 0, 2));
    EXPECT_FALSE(allowed("G{1,2}:00 G{3,4}:00", 0, 2));
}

TEST(CnotRules, SameBlockDetaches) {
    EXPECT_EQ(cnot("G{1,2}:01", 0, 1).to_string(), "+ 1");
    EXPECT_EQ(cnot("G{1,2}:00", 1, 0).to_string(), "0 +");
    EXPECT_EQ(cnot("G{1,2,3}:011", 1, 2).to_string(), "G{1,2}:01 0");
    EXPECT_EQ(cnot("G{1,2,3}:010", 0, 1).to_string(), "G{1,3}:00 1");
}

TEST(CnotRules, IncompatibleThrowsAndLeavesStateAlone) {
    auto s = GchState::parse("- 0");
    EXPECT_THROW(apply_cnot_in_place(s, 0, 1), IncompatiblePair);
    EXPECT_EQ(s.to_string(), "- 0");
    EXPECT_THROW(apply_cnot_in_place(s, 0, 0), InvalidArgument);
    EXPECT_THROW(apply_cnot_in_place(s, 0, 2), InvalidArgument);
}

// Every compatible pair on every small state matches the dense CNOT, every
// incompatible pair leaves the enumerated set.
TEST(CnotRules, ExhaustiveClosureAndIncompleteness) {
    for (std::size_t n = 2; n <= 3; ++n) {
        const auto census = oracle::census_keys(n);
        for (const auto &s : enumerate_states(n)) {
            for (Qubit c = 0; c < n; ++c) {
                for (Qubit t = 0; t < n; ++t) {
                    if (c == t) {
                        continue;
                    }
                    const auto dense = dense_cnot(s, c, t);
                    if (is_compatible(s, c, t)) {
                        const auto out = apply_cnot_symbolic(s, c, t);
                        EXPECT_NO_THROW(out.check_invariants());
                        EXPECT_TRUE(equal_up_to_phase(to_statevector(out), dense))
                            << s.to_string() << " CNOT(" << c + 1 << "->" << t + 1 << ")";
                    } else {
                        EXPECT_EQ(census.count(oracle::phase_key(dense)), 0u)
                            << s.to_string() << " CNOT(" << c + 1 << "->" << t + 1 << ") is GCH but was rejected";
                    }
                }
            }
        }
    }
}

TEST(CnotRules, RandomClosureUpToEightQubits) {
    PrngStream rng = PrngStream::from_u64(2024);
    std::size_t applied = 0;
    while (applied < 5000) {
        const std::size_t n = 2 + rng.uniform_below(7);
        GchState s = sample_uniform_state(n, rng).state;
        for (int step = 0; step < 10; ++step) {
            const auto c = static_cast<Qubit>(rng.uniform_below(n));
            auto t = static_cast<Qubit>(rng.uniform_below(n - 1));
            t += t >= c;
            if (!is_compatible(s, c, t)) {
                continue;
            }
            const auto dense = dense_cnot(s, c, t);
            s = apply_cnot_symbolic(s, c, t);
            ASSERT_TRUE(equal_up_to_phase(to_statevector(s), dense));
            ++applied;
        }
    }
}

TEST(CnotRules, SameBlockCnotIsAnInvolution) {
    for (std::size_t n = 2; n <= 4; ++n) {
        for (const auto &s : enumerate_states(n)) {
            for (const auto &b : s.blocks()) {
                for (Qubit c : b.positions) {
                    for (Qubit t : b.positions) {
                        if (c == t) {
                            continue;
                        }
                        const auto once = apply_cnot_symbolic(s, c, t);
                        ASSERT_TRUE(is_compatible(once, c, t));
                        EXPECT_EQ(apply_cnot_symbolic(once, c, t), s);
                    }
                }
            }
        }
    }
}

// A basis-compatible pair is compatible on every state of that basis, and the
// basis rewrite tracks the state rewrite.
TEST(CnotRules, BasisRulesAgreeWithStateRules) {
    for (std::size_t n = 2; n <= 4; ++n) {
        const auto states = enumerate_states(n);
        for (const auto &b : enumerate_bases(n)) {
            for (Qubit c = 0; c < n; ++c) {
                for (Qubit t = 0; t < n; ++t) {
                    if (c == t) {
                        continue;
                    }
                    bool every = true;
                    for (const auto &s : states) {
                        if (!(basis_of(s) == b)) {
                            continue;
                        }
                        if (!is_compatible(s, c, t)) {
                            every = false;
                            continue;
                        }
                        if (is_compatible(b, c, t)) {
                            EXPECT_EQ(basis_of(apply_cnot_symbolic(s, c, t)), apply_cnot_symbolic(b, c, t));
                        }
                    }
                    EXPECT_EQ(is_compatible(b, c, t), every) << b.to_string() << " " << c + 1 << "->" << t + 1;
                }
            }
        }
    }
}
