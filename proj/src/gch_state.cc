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

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "gchowf/errors.h"

namespace gchowf {

namespace {

char glyph(QubitKind k) {
    switch (k) {
        case QubitKind::C0:
            return '0';
        case QubitKind::C1:
            return '1';
        case QubitKind::HPlus:
            return '+';
        case QubitKind::HMinus:
            return '-';
        case QubitKind::Ghz:
            break;
    }
    return '?';
}

QubitKind kind_from_glyph(char c) {
    switch (c) {
        case '0':
            return QubitKind::C0;
        case '1':
            return QubitKind::C1;
        case '+':
            return QubitKind::HPlus;
        case '-':
            return QubitKind::HMinus;
        default:
            throw InvalidArgument(std::string("unknown qubit glyph '") + c + "'");
    }
}

void append_block_token(std::ostringstream &out, const std::vector<Qubit> &positions) {
    out << "G{";
    for (std::size_t i = 0; i < positions.size(); ++i) {
        out << (i ? "," : "") << positions[i] + 1;
    }
    out << "}";
}

}  // namespace

GchState::GchState(std::size_t n) : labels_(n) {
}

GchState GchState::from_parts(std::size_t n, std::vector<QubitLabel> labels, std::vector<GhzBlock> blocks) {
    if (labels.size() != n) {
        throw InvalidArgument("label count " + std::to_string(labels.size()) + " != n " + std::to_string(n));
    }
    std::vector<int> owner(n, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const auto &blk = blocks[b];
        if (blk.positions.size() != blk.bits.size()) {
            throw InvalidArgument("GHZ block positions/bits length mismatch");
        }
        for (std::size_t i = 0; i < blk.positions.size(); ++i) {
            Qubit q = blk.positions[i];
            if (q >= n) {
                throw InvalidArgument("GHZ block position " + std::to_string(q + 1) + " out of range");
            }
            if (owner[q] != -1) {
                throw InvalidArgument("qubit " + std::to_string(q + 1) + " listed in two GHZ blocks");
            }
            if (blk.bits[i] > 1) {
                throw InvalidArgument("GHZ block bit must be 0 or 1");
            }
            owner[q] = static_cast<int>(b);
        }
    }
    for (std::size_t q = 0; q < n; ++q) {
        if (owner[q] >= 0) {
            labels[q] = QubitLabel::ghz(static_cast<std::uint32_t>(owner[q]));
        } else if (labels[q].kind == QubitKind::Ghz) {
            throw InvalidArgument("qubit " + std::to_string(q + 1) + " labelled GHZ but in no block");
        }
    }
    GchState s;
    s.labels_ = std::move(labels);
    s.blocks_ = std::move(blocks);
    s.canonicalize();
    return s;
}

GchState GchState::product(std::string_view glyphs) {
    std::vector<QubitLabel> labels;
    labels.reserve(glyphs.size());
    for (char c : glyphs) {
        labels.push_back({kind_from_glyph(c), 0});
    }
    const std::size_t n = labels.size();
    return from_parts(n, std::move(labels), {});
}

GchState GchState::parse(std::string_view text) {
    std::vector<std::string> tokens;
    {
        std::istringstream in{std::string(text)};
        std::string tok;
        while (in >> tok) {
            tokens.push_back(tok);
        }
    }
    struct Parsed {
        bool is_block;
        QubitKind kind;
        GhzBlock block;
    };
    std::vector<Parsed> parsed;
    std::size_t n = 0;
    for (const auto &tok : tokens) {
        if (tok.size() == 1) {
            parsed.push_back({false, kind_from_glyph(tok[0]), {}});
            ++n;
            continue;
        }
        // G{p1,p2,...}:bits
        auto close = tok.find('}');
        auto colon = tok.find(':');
        if (tok.rfind("G{", 0) != 0 || close == std::string::npos || colon != close + 1) {
            throw InvalidArgument("malformed state token '" + tok + "'");
        }
        GhzBlock blk;
        std::string inner = tok.substr(2, close - 2);
        std::istringstream list(inner);
        std::string item;
        while (std::getline(list, item, ',')) {
            if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit)) {
                throw InvalidArgument("malformed GHZ position in '" + tok + "'");
            }
            auto p = std::stoul(item);
            if (p == 0) {
                throw InvalidArgument("GHZ positions are 1-based in '" + tok + "'");
            }
            blk.positions.push_back(static_cast<Qubit>(p - 1));
        }
        for (char c : tok.substr(colon + 1)) {
            if (c != '0' && c != '1') {
                throw InvalidArgument("malformed GHZ bits in '" + tok + "'");
            }
            blk.bits.push_back(static_cast<std::uint8_t>(c - '0'));
        }
        if (blk.positions.size() < 2 || blk.positions.size() != blk.bits.size()) {
            throw InvalidArgument("GHZ token '" + tok + "' needs >= 2 positions and one bit per position");
        }
        if (!std::is_sorted(blk.positions.begin(), blk.positions.end())) {
            throw InvalidArgument("GHZ positions must ascend in '" + tok + "'");
        }
        n += blk.positions.size();
        parsed.push_back({true, QubitKind::Ghz, std::move(blk)});
    }

    std::vector<QubitLabel> labels(n);
    std::vector<bool> taken(n, false);
    std::vector<GhzBlock> blocks;
    std::size_t cursor = 0;
    auto advance = [&] {
        while (cursor < n && taken[cursor]) {
            ++cursor;
        }
    };
    for (auto &p : parsed) {
        advance();
        if (!p.is_block) {
            labels[cursor] = {p.kind, 0};
            taken[cursor] = true;
            continue;
        }
        if (p.block.positions.front() != cursor) {
            throw InvalidArgument("GHZ block must start at the smallest unassigned position " + std::to_string(cursor + 1));
        }
        for (Qubit q : p.block.positions) {
            if (q >= n || taken[q]) {
                throw InvalidArgument("GHZ position " + std::to_string(q + 1) + " out of range or reused");
            }
            taken[q] = true;
        }
        blocks.push_back(std::move(p.block));
    }
    return from_parts(n, std::move(labels), std::move(blocks));
}

std::uint8_t GchState::ghz_bit(Qubit q) const {
    const auto &blk = block_of(q);
    auto it = std::lower_bound(blk.positions.begin(), blk.positions.end(), q);
    return blk.bits[static_cast<std::size_t>(it - blk.positions.begin())];
}

void GchState::canonicalize() {
    std::vector<GhzBlock> kept;
    kept.reserve(blocks_.size());
    for (auto &blk : blocks_) {
        std::vector<std::size_t> order(blk.positions.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](auto a, auto b) { return blk.positions[a] < blk.positions[b]; });
        GhzBlock sorted;
        for (auto i : order) {
            sorted.positions.push_back(blk.positions[i]);
            sorted.bits.push_back(blk.bits[i]);
        }
        if (sorted.positions.empty()) {
            continue;
        }
        if (sorted.positions.size() == 1) {
            labels_[sorted.positions[0]] = {QubitKind::HPlus, 0};
            continue;
        }
        if (sorted.bits[0]) {
            for (auto &b : sorted.bits) {
                b ^= 1;
            }
        }
        kept.push_back(std::move(sorted));
    }
    std::sort(kept.begin(), kept.end(), [](const GhzBlock &a, const GhzBlock &b) { return a.positions[0] < b.positions[0]; });
    for (std::uint32_t b = 0; b < kept.size(); ++b) {
        for (Qubit q : kept[b].positions) {
            labels_[q] = QubitLabel::ghz(b);
        }
    }
    for (auto &l : labels_) {
        if (l.kind != QubitKind::Ghz) {
            l.block = 0;
        }
    }
    blocks_ = std::move(kept);
}

std::string GchState::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (Qubit q = 0; q < labels_.size(); ++q) {
        const auto &l = labels_[q];
        if (l.kind == QubitKind::Ghz && blocks_[l.block].positions[0] != q) {
            continue;
        }
        if (!first) {
            out << ' ';
        }
        first = false;
        if (l.kind != QubitKind::Ghz) {
            out << glyph(l.kind);
            continue;
        }
        const auto &blk = blocks_[l.block];
        append_block_token(out, blk.positions);
        out << ':';
        for (auto b : blk.bits) {
            out << static_cast<char>('0' + b);
        }
    }
    return out.str();
}

void GchState::check_invariants() const {
    const std::size_t n = labels_.size();
    std::vector<int> owner(n, -1);
    Qubit prev_first = 0;
    for (std::uint32_t b = 0; b < blocks_.size(); ++b) {
        const auto &blk = blocks_[b];
        if (blk.positions.size() < 2 || blk.positions.size() != blk.bits.size()) {
            throw std::logic_error("block shape");
        }
        if (blk.bits[0] != 0) {
            throw std::logic_error("block not canonical (bits[0] != 0)");
        }
        if (b > 0 && blk.positions[0] <= prev_first) {
            throw std::logic_error("blocks not ordered by smallest member");
        }
        prev_first = blk.positions[0];
        for (std::size_t i = 0; i < blk.positions.size(); ++i) {
            if (i > 0 && blk.positions[i] <= blk.positions[i - 1]) {
                throw std::logic_error("block positions not strictly increasing");
            }
            Qubit q = blk.positions[i];
            if (q >= n || owner[q] != -1) {
                throw std::logic_error("block position out of range or shared");
            }
            if (blk.bits[i] > 1) {
                throw std::logic_error("block bit out of range");
            }
            owner[q] = static_cast<int>(b);
        }
    }
    for (std::size_t q = 0; q < n; ++q) {
        const auto &l = labels_[q];
        if ((l.kind == QubitKind::Ghz) != (owner[q] >= 0)) {
            throw std::logic_error("label/block membership disagree");
        }
        if (l.kind == QubitKind::Ghz && l.block != static_cast<std::uint32_t>(owner[q])) {
            throw std::logic_error("label refers to the wrong block");
        }
        if (l.kind != QubitKind::Ghz && l.block != 0) {
            throw std::logic_error("singleton label carries a block id");
        }
    }
}

GchBasis::GchBasis(std::vector<Slot> slots, std::vector<std::vector<Qubit>> blocks)
    : slots_(std::move(slots)), blocks_(std::move(blocks)) {
    const std::size_t n = slots_.size();
    std::vector<int> owner(n, -1);
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (blocks_[b].size() < 2) {
            throw InvalidArgument("basis GHZ block needs >= 2 positions");
        }
        for (Qubit q : blocks_[b]) {
            if (q >= n || owner[q] != -1) {
                throw InvalidArgument("basis GHZ block position out of range or shared");
            }
            owner[q] = static_cast<int>(b);
        }
    }
    for (std::size_t q = 0; q < n; ++q) {
        if ((slots_[q].kind == BasisKind::Ghz) != (owner[q] >= 0)) {
            throw InvalidArgument("basis slot kinds do not match block membership");
        }
        if (owner[q] >= 0) {
            slots_[q].block = static_cast<std::uint32_t>(owner[q]);
        }
    }
    canonicalize();
}

void GchBasis::canonicalize() {
    std::vector<std::vector<Qubit>> kept;
    for (auto &blk : blocks_) {
        std::sort(blk.begin(), blk.end());
        if (blk.size() == 1) {
            slots_[blk[0]] = {BasisKind::H, 0};
        } else if (!blk.empty()) {
            kept.push_back(std::move(blk));
        }
    }
    std::sort(kept.begin(), kept.end(), [](const auto &a, const auto &b) { return a[0] < b[0]; });
    for (auto &s : slots_) {
        if (s.kind != BasisKind::Ghz) {
            s.block = 0;
        }
    }
    for (std::uint32_t b = 0; b < kept.size(); ++b) {
        for (Qubit q : kept[b]) {
            slots_[q] = {BasisKind::Ghz, b};
        }
    }
    blocks_ = std::move(kept);
}

std::string GchBasis::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (Qubit q = 0; q < slots_.size(); ++q) {
        const auto &s = slots_[q];
        if (s.kind == BasisKind::Ghz && blocks_[s.block][0] != q) {
            continue;
        }
        if (!first) {
            out << ' ';
        }
        first = false;
        switch (s.kind) {
            case BasisKind::C:
                out << 'C';
                break;
            case BasisKind::H:
                out << 'H';
                break;
            case BasisKind::Ghz:
                append_block_token(out, blocks_[s.block]);
                break;
        }
    }
    return out.str();
}

GchBasis basis_of(const GchState &state) {
    std::vector<GchBasis::Slot> slots(state.num_qubits());
    for (std::size_t q = 0; q < slots.size(); ++q) {
        const auto &l = state.label(static_cast<Qubit>(q));
        if (is_computational(l.kind)) {
            slots[q] = {BasisKind::C, 0};
        } else if (is_hadamard(l.kind)) {
            slots[q] = {BasisKind::H, 0};
        } else {
            slots[q] = {BasisKind::Ghz, l.block};
        }
    }
    std::vector<std::vector<Qubit>> blocks;
    blocks.reserve(state.blocks().size());
    for (const auto &blk : state.blocks()) {
        blocks.push_back(blk.positions);
    }
    return GchBasis(std::move(slots), std::move(blocks));
}

std::vector<std::uint8_t> canonical_basis_bytes(const GchBasis &basis) {
    std::vector<std::uint8_t> out;
    const std::size_t n = basis.num_qubits();
    out.reserve(2 + 2 * n);
    auto put16 = [&](std::size_t v) {
        out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xFF));
        out.push_back(static_cast<std::uint8_t>(v & 0xFF));
    };
    put16(n);
    for (const auto &s : basis.slots()) {
        switch (s.kind) {
            case BasisKind::C:
                put16(0);
                break;
            case BasisKind::H:
                put16(1);
                break;
            case BasisKind::Ghz:
                put16(2 + s.block);
                break;
        }
    }
    return out;
}

}  // namespace gchowf
