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

#include <algorithm>

#include "gchowf/cnot_rules.h"
#include "gchowf/enumerate.h"

namespace gchowf {

std::string_view rule_name(EncodingRule rule) {
    switch (rule) {
        case EncodingRule::LengthMismatch:
            return "LengthMismatch";
        case EncodingRule::CountOverflow:
            return "CountOverflow";
        case EncodingRule::PositionOutOfRange:
            return "PositionOutOfRange";
        case EncodingRule::SelfLoop:
            return "SelfLoop";
        case EncodingRule::Unsorted:
            return "Unsorted";
        case EncodingRule::ControlNotPlus:
            return "ControlNotPlus";
        case EncodingRule::TargetNotComputational:
            return "TargetNotComputational";
        case EncodingRule::TargetIsControl:
            return "TargetIsControl";
        case EncodingRule::DuplicateTarget:
            return "DuplicateTarget";
        case EncodingRule::ControlNotSmallest:
            return "ControlNotSmallest";
        case EncodingRule::NonZeroPadding:
            return "NonZeroPadding";
    }
    return "Unknown";
}

Bitstring StateEncoding::to_bits() const {
    const EncodingLayout layout(n);
    Bitstring out;
    out.append(init_bits);
    out.append(hadamard_bits);
    out.append(pairs.size(), layout.count_width);
    for (const auto &p : pairs) {
        out.append(p.control, layout.index_width);
        out.append(p.target, layout.index_width);
    }
    return out;
}

namespace {

std::string pos(Qubit q) {
    return std::to_string(q + 1);
}

/// Structural parse plus every rule check; returns the first violation.
ValidationReport check(const Bitstring &enc, std::size_t n, StateEncoding *parsed) {
    auto fail = [](EncodingRule r, std::string d) { return ValidationReport{r, std::move(d)}; };
    if (n == 0) {
        return fail(EncodingRule::LengthMismatch, "n must be >= 1");
    }
    const EncodingLayout layout(n);
    if (enc.size() < layout.header_bits()) {
        return fail(EncodingRule::LengthMismatch, "expected at least " + std::to_string(layout.header_bits()) +
                                                      " bits, got " + std::to_string(enc.size()));
    }
    const std::size_t count = enc.read(2 * n, layout.count_width);
    if (count > n - 1) {
        return fail(EncodingRule::CountOverflow, "cnot_count " + std::to_string(count) + " > n-1");
    }
    if (enc.size() != layout.total_bits(count)) {
        return fail(EncodingRule::LengthMismatch, "expected " + std::to_string(layout.total_bits(count)) +
                                                      " bits for " + std::to_string(count) + " CNOTs, got " +
                                                      std::to_string(enc.size()));
    }
    StateEncoding e;
    e.n = n;
    e.init_bits = enc.slice(0, n);
    e.hadamard_bits = enc.slice(n, n);
    std::size_t at = layout.header_bits();
    for (std::size_t i = 0; i < count; ++i) {
        CnotPair p{static_cast<Qubit>(enc.read(at, layout.index_width)),
                   static_cast<Qubit>(enc.read(at + layout.index_width, layout.index_width))};
        at += 2 * layout.index_width;
        if (p.control >= n || p.target >= n) {
            return fail(EncodingRule::PositionOutOfRange, "pair " + std::to_string(i + 1) + " names a qubit past n");
        }
        if (p.control == p.target) {
            return fail(EncodingRule::SelfLoop, "pair " + std::to_string(i + 1) + " uses qubit " + pos(p.control) +
                                                    " twice");
        }
        if (!e.pairs.empty() && !(e.pairs.back() < p)) {
            return fail(EncodingRule::Unsorted, "pair " + std::to_string(i + 1) + " is not after its predecessor");
        }
        e.pairs.push_back(p);
    }
    std::vector<bool> is_control(n, false);
    for (const auto &p : e.pairs) {
        is_control[p.control] = true;
    }
    std::vector<bool> seen_target(n, false);
    for (const auto &p : e.pairs) {
        if (!e.hadamard_bits[p.control] || e.init_bits[p.control]) {
            return fail(EncodingRule::ControlNotPlus, "control " + pos(p.control) + " is not prepared as |+>");
        }
        if (e.hadamard_bits[p.target]) {
            return fail(EncodingRule::TargetNotComputational, "target " + pos(p.target) + " has a Hadamard");
        }
        if (is_control[p.target]) {
            return fail(EncodingRule::TargetIsControl, "qubit " + pos(p.target) + " is both target and control");
        }
        if (seen_target[p.target]) {
            return fail(EncodingRule::DuplicateTarget, "qubit " + pos(p.target) + " is targeted twice");
        }
        seen_target[p.target] = true;
        if (p.control > p.target) {
            return fail(EncodingRule::ControlNotSmallest,
                        "control " + pos(p.control) + " is larger than its target " + pos(p.target));
        }
    }
    if (parsed) {
        *parsed = std::move(e);
    }
    return {};
}

}  // namespace

ValidationReport validate_encoding(const Bitstring &enc, std::size_t n) {
    return check(enc, n, nullptr);
}

StateEncoding parse_state_encoding(const Bitstring &enc, std::size_t n) {
    StateEncoding e;
    auto report = check(enc, n, &e);
    if (!report) {
        throw InvalidEncoding(*report.violated, report.detail);
    }
    return e;
}

GchState decode_state(const Bitstring &enc, std::size_t n) {
    const StateEncoding e = parse_state_encoding(enc, n);
    std::vector<QubitLabel> labels(n);
    for (Qubit q = 0; q < n; ++q) {
        const bool one = e.init_bits[q];
        if (e.hadamard_bits[q]) {
            labels[q].kind = one ? QubitKind::HMinus : QubitKind::HPlus;
        } else {
            labels[q].kind = one ? QubitKind::C1 : QubitKind::C0;
        }
    }
    GchState s = GchState::from_parts(n, std::move(labels), {});
    for (const auto &p : e.pairs) {
        apply_cnot_in_place(s, p.control, p.target);
    }
    return s;
}

Bitstring encode_state(const GchState &state) {
    const std::size_t n = state.num_qubits();
    StateEncoding e;
    e.n = n;
    e.init_bits = Bitstring(n);
    e.hadamard_bits = Bitstring(n);
    for (Qubit q = 0; q < n; ++q) {
        switch (state.label(q).kind) {
            case QubitKind::C0:
                break;
            case QubitKind::C1:
                e.init_bits.set(q, true);
                break;
            case QubitKind::HPlus:
                e.hadamard_bits.set(q, true);
                break;
            case QubitKind::HMinus:
                e.init_bits.set(q, true);
                e.hadamard_bits.set(q, true);
                break;
            case QubitKind::Ghz:
                break;
        }
    }
    for (const auto &blk : state.blocks()) {
        const Qubit control = blk.positions[0];
        e.hadamard_bits.set(control, true);
        for (std::size_t i = 1; i < blk.positions.size(); ++i) {
            e.init_bits.set(blk.positions[i], blk.bits[i] != 0);
            e.pairs.push_back({control, blk.positions[i]});
        }
    }
    std::sort(e.pairs.begin(), e.pairs.end());
    return e.to_bits();
}

Bitstring state_encoding_from_bytes(std::span<const std::uint8_t> bytes, std::size_t n) {
    const EncodingLayout layout(n);
    if (bytes.size() * 8 < layout.header_bits()) {
        throw InvalidEncoding(EncodingRule::LengthMismatch, "byte string shorter than the fixed header");
    }
    const auto header = Bitstring::from_bytes(bytes, layout.header_bits());
    const std::size_t count = header.read(2 * n, layout.count_width);
    if (count > n - 1) {
        throw InvalidEncoding(EncodingRule::CountOverflow, "cnot_count " + std::to_string(count) + " > n-1");
    }
    const std::size_t nbits = layout.total_bits(count);
    if (bytes.size() != (nbits + 7) / 8) {
        throw InvalidEncoding(EncodingRule::LengthMismatch, "expected " + std::to_string((nbits + 7) / 8) +
                                                                " bytes, got " + std::to_string(bytes.size()));
    }
    auto all = Bitstring::from_bytes(bytes, bytes.size() * 8);
    for (std::size_t i = nbits; i < all.size(); ++i) {
        if (all[i]) {
            throw InvalidEncoding(EncodingRule::NonZeroPadding, "padding bit " + std::to_string(i) + " is set");
        }
    }
    return all.slice(0, nbits);
}

SampledState sample_uniform_state(std::size_t n, PrngStream &randomness) {
    if (n == 0) {
        throw InvalidArgument("sample_uniform_state needs n >= 1");
    }
    if (n > kMaxSampledQubits) {
        throw TooLarge("sample_uniform_state", n, kMaxSampledQubits);
    }
    const StateCount total = count_states(n);
    // Same byte-level rejection rule as PrngStream::uniform_below, widened to
    // 128 bits; n <= kMaxSampledQubits keeps the byte range below 2^128.
    unsigned bits = 0;
    while ((StateCount{1} << bits) < total) {
        ++bits;
    }
    const unsigned nbytes = (bits + 7) / 8;
    const StateCount range = StateCount{1} << (8 * nbytes);
    const StateCount limit = range - range % total;
    for (int attempt = 0; attempt < 1'000'000; ++attempt) {
        StateCount v = 0;
        for (unsigned i = 0; i < nbytes; ++i) {
            v = (v << 8) | randomness.next_byte();
        }
        if (v < limit) {
            GchState s = unrank_state(n, v % total);
            Bitstring enc = encode_state(s);
            return {std::move(enc), std::move(s)};
        }
    }
    throw RetriesExhausted("sample_uniform_state: 10^6 rejections");
}

}  // namespace gchowf
