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

#include "gchowf/enumerate.h"

#include <gtest/gtest.h>

#include <set>

#include "gchowf/errors.h"
#include "oracles.h"

using namespace gchowf;

TEST(Enumerate, StateCounts) {
    const std::vector<std::uint64_t> want{1, 4, 18, 92, 532, 3440, 24552};
    for (std::size_t n = 0; n < want.size(); ++n) {
        EXPECT_EQ(count_states(n), want[n]) << "n=" << n;
    }
    EXPECT_EQ(to_string(count_states(32)), "27603398477638676124656148433403904");
    EXPECT_THROW(count_states(kMaxCountedQubits + 1), TooLarge);
}

TEST(Enumerate, BasisCounts) {
    const std::vector<std::uint64_t> want{1, 2, 5, 15, 52, 203, 877, 4140, 21147};
    for (std::size_t n = 0; n < want.size(); ++n) {
        EXPECT_EQ(count_bases(n), want[n]) << "n=" << n;
    }
}

TEST(Enumerate, ListsMatchCountsAndAreDistinct) {
    for (std::size_t n = 1; n <= 5; ++n) {
        const auto states = enumerate_states(n);
        EXPECT_EQ(states.size(), count_states(n));
        std::set<std::string> text;
        for (const auto &s : states) {
            s.check_invariants();
            text.insert(s.to_string());
        }
        EXPECT_EQ(text.size(), states.size());
        EXPECT_EQ(enumerate_bases(n).size(), count_bases(n));
    }
    EXPECT_THROW(enumerate_states(kMaxEnumeratedStates + 1), TooLarge);
    EXPECT_THROW(enumerate_bases(kMaxEnumeratedBases + 1), TooLarge);
}

// Independent census: build every state from the definition as a dense vector
// and count distinct ones up to phase.
TEST(Enumerate, AgreesWithStatevectorCensus) {
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto census = oracle::census_keys(n);
        std::set<std::string> ours;
        for (const auto &s : enumerate_states(n)) {
            ours.insert(oracle::phase_key(to_statevector(s)));
        }
        EXPECT_EQ(census.size(), count_states(n)) << "n=" << n;
        EXPECT_EQ(ours, census) << "n=" << n;
    }
}

TEST(Enumerate, UnrankMatchesEnumerationOrder) {
    for (std::size_t n = 1; n <= 5; ++n) {
        const auto states = enumerate_states(n);
        for (std::size_t i = 0; i < states.size(); ++i) {
            ASSERT_EQ(unrank_state(n, i), states[i]) << "n=" << n << " i=" << i;
        }
        EXPECT_THROW(unrank_state(n, states.size()), InvalidArgument);
    }
}

TEST(Enumerate, UnrankLargeIndices) {
    const auto last = unrank_state(32, count_states(32) - 1);
    last.check_invariants();
    EXPECT_EQ(last.num_qubits(), 32u);
    unrank_state(33, count_states(33) / 3).check_invariants();
}

TEST(Enumerate, VisitorCanStopEarly) {
    std::size_t seen = 0;
    for_each_state(4, [&](const GchState &) { return ++seen < 10; });
    EXPECT_EQ(seen, 10u);
}
