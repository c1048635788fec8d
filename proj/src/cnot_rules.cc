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

#include <algorithm>

#include "gchowf/errors.h"

namespace gchowf {

/// Mutable access to the canonical representation. Every edit ends with a
/// canonicalize() call so callers only ever observe canonical values.
class SymbolicEditor {
   public:
    static void cnot(GchState &s, Qubit c, Qubit t) {
        auto &labels = s.labels_;
        auto &blocks = s.blocks_;
        const QubitLabel lc = labels[c];
        const QubitLabel lt = labels[t];
        switch (lc.kind) {
            case QubitKind::C0:
                return;
            case QubitKind::C1:
                if (lt.kind == QubitKind::C0) {
                    labels[t].kind = QubitKind::C1;
                } else if (lt.kind == QubitKind::C1) {
                    labels[t].kind = QubitKind::C0;
                } else if (lt.kind == QubitKind::Ghz) {
                    auto &blk = blocks[lt.block];
                    auto i = index_in(blk.positions, t);
                    blk.bits[i] ^= 1;
                    s.canonicalize();
                }
                return;
            case QubitKind::HPlus:
            case QubitKind::HMinus:
                if (lt.kind == QubitKind::HMinus) {
                    labels[c].kind = lc.kind == QubitKind::HPlus ? QubitKind::HMinus : QubitKind::HPlus;
                } else if (is_computational(lt.kind)) {
                    // H+ only; checked by the caller.
                    GhzBlock blk{{c, t}, {0, static_cast<std::uint8_t>(lt.kind == QubitKind::C1)}};
                    blocks.push_back(std::move(blk));
                    labels[c] = QubitLabel::ghz(static_cast<std::uint32_t>(blocks.size() - 1));
                    labels[t] = labels[c];
                    s.canonicalize();
                }
                return;
            case QubitKind::Ghz: {
                auto &blk = blocks[lc.block];
                std::uint8_t bc = blk.bits[index_in(blk.positions, c)];
                if (is_computational(lt.kind)) {
                    std::uint8_t v = lt.kind == QubitKind::C1;
                    blk.positions.push_back(t);
                    blk.bits.push_back(v ^ bc);
                    labels[t] = lc;
                    s.canonicalize();
                } else if (lt.kind == QubitKind::Ghz) {
                    // Same block (checked by the caller).
                    auto i = index_in(blk.positions, t);
                    std::uint8_t v = blk.bits[i] ^ bc;
                    blk.positions.erase(blk.positions.begin() + static_cast<std::ptrdiff_t>(i));
                    blk.bits.erase(blk.bits.begin() + static_cast<std::ptrdiff_t>(i));
                    labels[t] = {v ? QubitKind::C1 : QubitKind::C0, 0};
                    s.canonicalize();
                }
                return;
            }
        }
    }

    static void cnot(GchBasis &b, Qubit c, Qubit t) {
        auto &slots = b.slots_;
        auto &blocks = b.blocks_;
        const auto sc = slots[c];
        const auto st = slots[t];
        if (sc.kind != BasisKind::Ghz) {
            return;
        }
        auto &blk = blocks[sc.block];
        if (st.kind == BasisKind::C) {
            blk.push_back(t);
            slots[t] = sc;
        } else {
            blk.erase(std::find(blk.begin(), blk.end(), t));
            slots[t] = {BasisKind::C, 0};
        }
        b.canonicalize();
    }

   private:
    static std::size_t index_in(const std::vector<Qubit> &positions, Qubit q) {
        return static_cast<std::size_t>(std::find(positions.begin(), positions.end(), q) - positions.begin());
    }
};

namespace {

void check_pair(std::size_t n, Qubit c, Qubit t) {
    if (c >= n || t >= n) {
        throw InvalidArgument("CNOT endpoint out of range for " + std::to_string(n) + " qubits");
    }
    if (c == t) {
        throw InvalidArgument("CNOT control equals target");
    }
}

}  // namespace

std::optional<std::string_view> incompatibility(const GchState &state, Qubit control, Qubit target) {
    check_pair(state.num_qubits(), control, target);
    const auto kc = state.label(control).kind;
    const auto &lt = state.label(target);
    if (is_computational(kc)) {
        return std::nullopt;
    }
    if (is_hadamard(kc)) {
        if (is_hadamard(lt.kind)) {
            return std::nullopt;
        }
        if (is_computational(lt.kind)) {
            if (kc == QubitKind::HPlus) {
                return std::nullopt;
            }
            return "H- control on a computational target leaves a relative phase";
        }
        return "Hadamard control on a GHZ member gives a 4-branch superposition";
    }
    // GHZ control.
    if (is_computational(lt.kind) || lt.kind == QubitKind::HPlus) {
        return std::nullopt;
    }
    if (lt.kind == QubitKind::HMinus) {
        return "GHZ control on an H- target leaves a relative phase";
    }
    if (lt.block == state.label(control).block) {
        return std::nullopt;
    }
    return "control and target lie in different GHZ blocks";
}

void apply_cnot_in_place(GchState &state, Qubit control, Qubit target) {
    if (auto why = incompatibility(state, control, target)) {
        throw IncompatiblePair(control, target, std::string(*why));
    }
    SymbolicEditor::cnot(state, control, target);
}

GchState apply_cnot_symbolic(const GchState &state, Qubit control, Qubit target) {
    GchState out = state;
    apply_cnot_in_place(out, control, target);
    return out;
}

std::optional<std::string_view> incompatibility(const GchBasis &basis, Qubit control, Qubit target) {
    check_pair(basis.num_qubits(), control, target);
    const auto &sc = basis.slots()[control];
    const auto &st = basis.slots()[target];
    switch (sc.kind) {
        case BasisKind::C:
            return std::nullopt;
        case BasisKind::H:
            if (st.kind == BasisKind::H) {
                return std::nullopt;
            }
            return st.kind == BasisKind::C ? "Hadamard control on a computational target fails for H-"
                                           : "Hadamard control on a GHZ member gives a 4-branch superposition";
        case BasisKind::Ghz:
            if (st.kind == BasisKind::C) {
                return std::nullopt;
            }
            if (st.kind == BasisKind::H) {
                return "GHZ control on a Hadamard target fails for H-";
            }
            if (st.block == sc.block) {
                return std::nullopt;
            }
            return "control and target lie in different GHZ blocks";
    }
    return "unreachable";
}

void apply_cnot_in_place(GchBasis &basis, Qubit control, Qubit target) {
    if (auto why = incompatibility(basis, control, target)) {
        throw IncompatiblePair(control, target, std::string(*why));
    }
    SymbolicEditor::cnot(basis, control, target);
}

GchBasis apply_cnot_symbolic(const GchBasis &basis, Qubit control, Qubit target) {
    GchBasis out = basis;
    apply_cnot_in_place(out, control, target);
    return out;
}

}  // namespace gchowf
