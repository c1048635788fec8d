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

#include <algorithm>

#include "gchowf/errors.h"

namespace gchowf {

namespace {

std::uint64_t binomial(std::size_t n, std::size_t k) {
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

/// counts[r] for r = 0..n, for `singles` singleton kinds and blocks carrying
/// 2^(j-1) (states) or 1 (bases) values.
std::vector<StateCount> count_table(std::size_t n, unsigned singles, bool with_bits) {
    std::vector<StateCount> t(n + 1, 0);
    t[0] = 1;
    for (std::size_t r = 1; r <= n; ++r) {
        StateCount acc = singles * t[r - 1];
        for (std::size_t j = 2; j <= r; ++j) {
            StateCount values = with_bits ? (StateCount{1} << (j - 1)) : 1;
            acc += binomial(r - 1, j - 1) * values * t[r - j];
        }
        t[r] = acc;
    }
    return t;
}

/// Lexicographic k-combination iterator over indices 0..m-1.
bool next_combination(std::vector<std::size_t> &c, std::size_t m) {
    const std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] < m - k + i) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    return false;
}

std::vector<std::size_t> unrank_combination(std::size_t m, std::size_t k, std::uint64_t index) {
    std::vector<std::size_t> out;
    std::size_t c = 0;
    while (out.size() < k) {
        const std::uint64_t with_c = binomial(m - c - 1, k - out.size() - 1);
        if (index < with_c) {
            out.push_back(c);
        } else {
            index -= with_c;
        }
        ++c;
    }
    return out;
}

constexpr QubitKind kSingletonOrder[] = {QubitKind::C0, QubitKind::C1, QubitKind::HPlus, QubitKind::HMinus};

struct StateWalker {
    std::size_t n;
    const std::function<bool(const GchState &)> &visit;
    std::vector<QubitLabel> labels;
    std::vector<GhzBlock> blocks;
    std::vector<bool> taken;

    bool walk() {
        auto first = std::find(taken.begin(), taken.end(), false);
        if (first == taken.end()) {
            return visit(GchState::from_parts(n, labels, blocks));
        }
        const auto p = static_cast<Qubit>(first - taken.begin());
        taken[p] = true;
        for (auto kind : kSingletonOrder) {
            labels[p] = {kind, 0};
            if (!walk()) {
                return false;
            }
        }
        labels[p] = {};
        std::vector<Qubit> others;
        for (Qubit q = p + 1; q < n; ++q) {
            if (!taken[q]) {
                others.push_back(q);
            }
        }
        for (std::size_t k = 1; k <= others.size(); ++k) {
            std::vector<std::size_t> combo(k);
            for (std::size_t i = 0; i < k; ++i) {
                combo[i] = i;
            }
            do {
                GhzBlock blk;
                blk.positions.push_back(p);
                for (auto i : combo) {
                    blk.positions.push_back(others[i]);
                    taken[others[i]] = true;
                }
                for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << k); ++pattern) {
                    blk.bits.assign(1, 0);
                    for (std::size_t i = 0; i < k; ++i) {
                        blk.bits.push_back(static_cast<std::uint8_t>((pattern >> (k - 1 - i)) & 1));
                    }
                    blocks.push_back(blk);
                    const bool go_on = walk();
                    blocks.pop_back();
                    if (!go_on) {
                        return false;
                    }
                }
                for (auto i : combo) {
                    taken[others[i]] = false;
                }
            } while (next_combination(combo, others.size()));
        }
        taken[p] = false;
        return true;
    }
};

struct BasisWalker {
    std::size_t n;
    const std::function<bool(const GchBasis &)> &visit;
    std::vector<GchBasis::Slot> slots;
    std::vector<std::vector<Qubit>> blocks;
    std::vector<bool> taken;

    bool walk() {
        auto first = std::find(taken.begin(), taken.end(), false);
        if (first == taken.end()) {
            return visit(GchBasis(slots, blocks));
        }
        const auto p = static_cast<Qubit>(first - taken.begin());
        taken[p] = true;
        for (auto kind : {BasisKind::C, BasisKind::H}) {
            slots[p] = {kind, 0};
            if (!walk()) {
                return false;
            }
        }
        slots[p] = {BasisKind::Ghz, 0};
        std::vector<Qubit> others;
        for (Qubit q = p + 1; q < n; ++q) {
            if (!taken[q]) {
                others.push_back(q);
            }
        }
        for (std::size_t k = 1; k <= others.size(); ++k) {
            std::vector<std::size_t> combo(k);
            for (std::size_t i = 0; i < k; ++i) {
                combo[i] = i;
            }
            do {
                std::vector<Qubit> blk{p};
                for (auto i : combo) {
                    blk.push_back(others[i]);
                    taken[others[i]] = true;
                    slots[others[i]] = {BasisKind::Ghz, 0};
                }
                blocks.push_back(blk);
                const bool go_on = walk();
                blocks.pop_back();
                for (auto i : combo) {
                    taken[others[i]] = false;
                }
                if (!go_on) {
                    return false;
                }
            } while (next_combination(combo, others.size()));
        }
        slots[p] = {};
        taken[p] = false;
        return true;
    }
};

}  // namespace

std::string to_string(StateCount v) {
    if (v == 0) {
        return "0";
    }
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

StateCount count_states(std::size_t n) {
    if (n > kMaxCountedQubits) {
        throw TooLarge("count_states", n, kMaxCountedQubits);
    }
    return count_table(n, 4, true)[n];
}

StateCount count_bases(std::size_t n) {
    if (n > kMaxCountedQubits) {
        throw TooLarge("count_bases", n, kMaxCountedQubits);
    }
    return count_table(n, 2, false)[n];
}

void for_each_state(std::size_t n, const std::function<bool(const GchState &)> &visit) {
    StateWalker w{n, visit, std::vector<QubitLabel>(n), {}, std::vector<bool>(n, false)};
    w.walk();
}

std::vector<GchState> enumerate_states(std::size_t n) {
    if (n > kMaxEnumeratedStates) {
        throw TooLarge("enumerate_states", n, kMaxEnumeratedStates);
    }
    std::vector<GchState> out;
    out.reserve(static_cast<std::size_t>(count_states(n)));
    for_each_state(n, [&](const GchState &s) {
        out.push_back(s);
        return true;
    });
    return out;
}

GchState unrank_state(std::size_t n, StateCount index) {
    if (n > kMaxCountedQubits) {
        throw TooLarge("unrank_state", n, kMaxCountedQubits);
    }
    const auto t = count_table(n, 4, true);
    if (index >= t[n]) {
        throw InvalidArgument("state index out of range");
    }
    std::vector<QubitLabel> labels(n);
    std::vector<GhzBlock> blocks;
    std::vector<Qubit> remaining(n);
    for (Qubit q = 0; q < n; ++q) {
        remaining[q] = q;
    }
    while (!remaining.empty()) {
        const Qubit p = remaining.front();
        const std::size_t r = remaining.size();
        const StateCount sub = t[r - 1];
        if (index < 4 * sub) {
            labels[p] = {kSingletonOrder[static_cast<std::size_t>(index / sub)], 0};
            index %= sub;
            remaining.erase(remaining.begin());
            continue;
        }
        index -= 4 * sub;
        bool placed = false;
        for (std::size_t j = 2; j <= r && !placed; ++j) {
            const StateCount tail = t[r - j];
            const StateCount per_combo = (StateCount{1} << (j - 1)) * tail;
            const StateCount total = binomial(r - 1, j - 1) * per_combo;
            if (index >= total) {
                index -= total;
                continue;
            }
            const auto combo_index = static_cast<std::uint64_t>(index / per_combo);
            index %= per_combo;
            const auto pattern = static_cast<std::uint64_t>(index / tail);
            index %= tail;
            const auto combo = unrank_combination(r - 1, j - 1, combo_index);
            GhzBlock blk{{p}, {0}};
            for (std::size_t i = 0; i < combo.size(); ++i) {
                blk.positions.push_back(remaining[1 + combo[i]]);
                blk.bits.push_back(static_cast<std::uint8_t>((pattern >> (j - 2 - i)) & 1));
            }
            std::vector<Qubit> rest;
            for (Qubit q : remaining) {
                if (std::find(blk.positions.begin(), blk.positions.end(), q) == blk.positions.end()) {
                    rest.push_back(q);
                }
            }
            remaining = std::move(rest);
            blocks.push_back(std::move(blk));
            placed = true;
        }
    }
    return GchState::from_parts(n, std::move(labels), std::move(blocks));
}

void for_each_basis(std::size_t n, const std::function<bool(const GchBasis &)> &visit) {
    BasisWalker w{n, visit, std::vector<GchBasis::Slot>(n), {}, std::vector<bool>(n, false)};
    w.walk();
}

std::vector<GchBasis> enumerate_bases(std::size_t n) {
    if (n > kMaxEnumeratedBases) {
        throw TooLarge("enumerate_bases", n, kMaxEnumeratedBases);
    }
    std::vector<GchBasis> out;
    for_each_basis(n, [&](const GchBasis &b) {
        out.push_back(b);
        return true;
    });
    return out;
}

StateCount count_states_of_basis(const GchBasis &b) {
    std::size_t free_bits = 0;
    for (const auto &slot : b.slots()) {
        free_bits += slot.kind != BasisKind::Ghz;
    }
    for (const auto &block : b.blocks()) {
        free_bits += block.size() - 1;
    }
    if (free_bits >= 128) {
        throw TooLarge("count_states_of_basis", free_bits, 127);
    }
    return StateCount{1} << free_bits;
}

GchState state_of_basis(const GchBasis &b, StateCount index) {
    const std::size_t n = b.num_qubits();
    if (index >= count_states_of_basis(b)) {
        throw InvalidArgument("state index out of range for basis " + b.to_string());
    }
    std::size_t free_bits = 0;
    for (const auto &slot : b.slots()) {
        free_bits += slot.kind != BasisKind::Ghz;
    }
    for (const auto &block : b.blocks()) {
        free_bits += block.size() - 1;
    }
    auto next_bit = [&]() {
        --free_bits;
        return static_cast<std::uint8_t>((index >> free_bits) & 1);
    };
    std::vector<QubitLabel> labels(n);
    for (Qubit q = 0; q < n; ++q) {
        const auto kind = b.kind(q);
        if (kind == BasisKind::C) {
            labels[q].kind = next_bit() ? QubitKind::C1 : QubitKind::C0;
        } else if (kind == BasisKind::H) {
            labels[q].kind = next_bit() ? QubitKind::HMinus : QubitKind::HPlus;
        }
    }
    std::vector<GhzBlock> blocks;
    for (const auto &members : b.blocks()) {
        GhzBlock block{members, std::vector<std::uint8_t>(members.size(), 0)};
        for (std::size_t i = 1; i < members.size(); ++i) {
            block.bits[i] = next_bit();
        }
        blocks.push_back(std::move(block));
    }
    return GchState::from_parts(n, std::move(labels), std::move(blocks));
}

std::vector<GchState> states_of_basis(const GchBasis &b) {
    const StateCount total = count_states_of_basis(b);
    if (total > (StateCount{1} << 20)) {
        throw TooLarge("states_of_basis", static_cast<std::size_t>(std::min<StateCount>(total, SIZE_MAX)), 1u << 20);
    }
    std::vector<GchState> out;
    for (StateCount i = 0; i < total; ++i) {
        out.push_back(state_of_basis(b, i));
    }
    return out;
}

GchState sample_state_of_basis(const GchBasis &b, PrngStream &randomness) {
    const StateCount total = count_states_of_basis(b);
    // Index bits are independent fair coins; draw them 64 at a time.
    StateCount index = 0;
    std::size_t bits = 0;
    while ((StateCount{1} << bits) < total) {
        bits += 64;
    }
    for (std::size_t done = 0; done < bits; done += 64) {
        index = (index << 64) | randomness.next_u64();
    }
    return state_of_basis(b, index & (total - 1));
}

}  // namespace gchowf
