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

// Reference constructions that do not go through the symbolic code.

#include <cmath>
#include <complex>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "gchowf/statevector.h"

namespace gchowf::oracle {

/// Hashable fingerprint of a statevector up to global phase: rotate the first
/// non-negligible amplitude to the positive real axis, then round.
inline std::string phase_key(const Statevector &v) {
    const Statevector p = phase_normalized(v);
    std::string key;
    for (const auto &a : p.amplitudes()) {
        key += std::to_string(std::llround(a.real() * 1e6)) + "," + std::to_string(std::llround(a.imag() * 1e6)) + ";";
    }
    return key;
}

/// Every n-qubit state built straight from the definition: set partitions of
/// the positions, each part either a singleton in {0,1,+,-} or a GHZ block
/// (|x> + |~x>)/sqrt2 for every x. Duplicates up to phase are removed.
inline std::set<std::string> census_keys(std::size_t n) {
    std::set<std::string> keys;
    const double r = 1.0 / std::sqrt(2.0);
    const std::size_t dim = std::size_t{1} << n;
    // Restricted growth strings enumerate set partitions.
    std::vector<std::size_t> part(n, 0);
    while (true) {
        std::size_t parts = 0;
        for (auto p : part) {
            parts = std::max(parts, p + 1);
        }
        std::vector<std::vector<std::size_t>> members(parts);
        for (std::size_t q = 0; q < n; ++q) {
            members[part[q]].push_back(q);
        }
        // One choice index per part: singletons have 4, a j-block has 2^j patterns.
        std::vector<std::size_t> radix(parts);
        for (std::size_t i = 0; i < parts; ++i) {
            radix[i] = members[i].size() == 1 ? 4 : (std::size_t{1} << members[i].size());
        }
        std::vector<std::size_t> choice(parts, 0);
        while (true) {
            std::vector<Amplitude> amps(dim, 1.0);
            for (std::size_t idx = 0; idx < dim; ++idx) {
                auto bit = [&](std::size_t q) { return (idx >> (n - 1 - q)) & 1; };
                for (std::size_t i = 0; i < parts && amps[idx] != 0.0; ++i) {
                    const auto &m = members[i];
                    if (m.size() == 1) {
                        const auto b = bit(m[0]);
                        switch (choice[i]) {
                            case 0: amps[idx] *= b == 0 ? 1.0 : 0.0; break;
                            case 1: amps[idx] *= b == 1 ? 1.0 : 0.0; break;
                            case 2: amps[idx] *= r; break;
                            default: amps[idx] *= b == 0 ? r : -r; break;
                        }
                    } else {
                        std::size_t x = 0;
                        for (auto q : m) {
                            x = (x << 1) | bit(q);
                        }
                        const std::size_t all = (std::size_t{1} << m.size()) - 1;
                        amps[idx] *= (x == choice[i] || x == (choice[i] ^ all)) ? r : 0.0;
                    }
                }
            }
            keys.insert(phase_key(Statevector(n, std::move(amps))));
            std::size_t i = 0;
            while (i < parts && ++choice[i] == radix[i]) {
                choice[i++] = 0;
            }
            if (i == parts) {
                break;
            }
        }
        // Next restricted growth string.
        std::size_t q = n;
        while (q > 1) {
            --q;
            std::size_t prefix_max = 0;
            for (std::size_t k = 0; k < q; ++k) {
                prefix_max = std::max(prefix_max, part[k]);
            }
            if (part[q] <= prefix_max) {
                ++part[q];
                for (std::size_t k = q + 1; k < n; ++k) {
                    part[k] = 0;
                }
                break;
            }
            if (q == 1) {
                return keys;
            }
        }
        if (n <= 1) {
            return keys;
        }
    }
}

}  // namespace gchowf::oracle
