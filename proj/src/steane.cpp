// Copyright 2026 The MGPD Simulator Authors
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

#include "mgpd/steane.hpp"

#include <stdexcept>

namespace mgpd {

namespace {

// Qubit sets {4,5,6,7}, {2,3,6,7}, {1,3,5,7} as bit masks (qubit q -> bit q-1).
constexpr std::array<std::uint64_t, 3> kCheckSupports = {0x78, 0x66, 0x55};

void require_block(const PauliOperator &op, const char *what) {
    if (op.num_qubits() != kBlockQubits) {
        throw std::invalid_argument(std::string(what) + ": expected a 7-qubit operator, got " +
                                    std::to_string(op.num_qubits()));
    }
}

void require_generator_index(std::size_t generator, const char *what) {
    if (generator < 1 || generator > kNumGenerators) {
        throw std::out_of_range(std::string(what) + ": generator index must be 1..6");
    }
}

std::uint8_t triple_to_bits(int triple, int first_generator) {
    std::uint8_t bits = 0;
    if (triple & 4) bits |= std::uint8_t(1u << (first_generator - 1));
    if (triple & 2) bits |= std::uint8_t(1u << first_generator);
    if (triple & 1) bits |= std::uint8_t(1u << (first_generator + 1));
    return bits;
}

}  // namespace

std::string_view to_string(ChannelKind kind) {
    switch (kind) {
        case ChannelKind::BitFlip: return "bit-flip";
        case ChannelKind::PhaseFlip: return "phase-flip";
        case ChannelKind::BitPhaseFlip: return "bit-phase-flip";
    }
    return "unknown";
}

ChannelKind parse_channel_kind(std::string_view text) {
    if (text == "bit-flip" || text == "bc" || text == "BC") return ChannelKind::BitFlip;
    if (text == "phase-flip" || text == "pc" || text == "PC") return ChannelKind::PhaseFlip;
    if (text == "bit-phase-flip" || text == "bpc" || text == "BPC") return ChannelKind::BitPhaseFlip;
    throw std::invalid_argument("unknown channel kind '" + std::string(text) + "'");
}

PauliKind error_kind(ChannelKind kind) {
    switch (kind) {
        case ChannelKind::BitFlip: return PauliKind::X;
        case ChannelKind::PhaseFlip: return PauliKind::Z;
        case ChannelKind::BitPhaseFlip: return PauliKind::Y;
    }
    throw std::invalid_argument("unknown channel kind");
}

Syndrome Syndrome::parse(std::string_view text) {
    if (text.size() != kNumGenerators) {
        throw std::invalid_argument("Syndrome::parse: expected 6 characters, got '" +
                                    std::string(text) + "'");
    }
    std::uint8_t bits = 0;
    for (std::size_t k = 0; k < kNumGenerators; ++k) {
        if (text[k] == '1') {
            bits |= std::uint8_t(1u << k);
        } else if (text[k] != '0') {
            throw std::invalid_argument("Syndrome::parse: non-binary character");
        }
    }
    return Syndrome(bits);
}

bool Syndrome::bit(std::size_t generator) const {
    require_generator_index(generator, "Syndrome::bit");
    return (bits_ >> (generator - 1)) & 1;
}

int Syndrome::x_check_triple() const {
    return ((bits_ & 1) << 2) | (bits_ & 2) | ((bits_ >> 2) & 1);
}

int Syndrome::z_check_triple() const {
    return (((bits_ >> 3) & 1) << 2) | (((bits_ >> 4) & 1) << 1) | ((bits_ >> 5) & 1);
}

std::string Syndrome::str() const {
    std::string out(kNumGenerators, '0');
    for (std::size_t k = 0; k < kNumGenerators; ++k) {
        if ((bits_ >> k) & 1) out[k] = '1';
    }
    return out;
}

SignMask SignMask::of(std::initializer_list<int> generators) {
    std::uint8_t bits = 0;
    for (int g : generators) {
        require_generator_index(static_cast<std::size_t>(g), "SignMask::of");
        bits |= std::uint8_t(1u << (g - 1));
    }
    return SignMask(bits);
}

SignMask SignMask::parse(std::string_view text) {
    if (text.empty() || text == "Original" || text == "none" || text == "{}") return SignMask();
    std::uint8_t bits = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const char c = text[pos];
        if (c == ',' || c == ' ' || c == '{' || c == '}') {
            ++pos;
            continue;
        }
        if (c != 'g' || pos + 1 >= text.size() || text[pos + 1] < '1' || text[pos + 1] > '6') {
            throw std::invalid_argument("SignMask::parse: expected g1..g6 in '" + std::string(text) +
                                        "'");
        }
        bits |= std::uint8_t(1u << (text[pos + 1] - '1'));
        pos += 2;
    }
    return SignMask(bits);
}

bool SignMask::flipped(std::size_t generator) const {
    require_generator_index(generator, "SignMask::flipped");
    return (bits_ >> (generator - 1)) & 1;
}

std::string SignMask::str() const {
    if (bits_ == 0) return "Original";
    std::string out;
    for (std::size_t k = 1; k <= kNumGenerators; ++k) {
        if (!flipped(k)) continue;
        if (!out.empty()) out += ',';
        out += 'g';
        out += std::to_string(k);
    }
    return out;
}

const CodeDefinition &steane_code() {
    static const CodeDefinition code = [] {
        const std::uint64_t all = 0x7F;
        return CodeDefinition{
            {PauliOperator(kBlockQubits, kCheckSupports[0], 0),
             PauliOperator(kBlockQubits, kCheckSupports[1], 0),
             PauliOperator(kBlockQubits, kCheckSupports[2], 0),
             PauliOperator(kBlockQubits, 0, kCheckSupports[0]),
             PauliOperator(kBlockQubits, 0, kCheckSupports[1]),
             PauliOperator(kBlockQubits, 0, kCheckSupports[2])},
            PauliOperator(kBlockQubits, all, 0),
            PauliOperator(kBlockQubits, 0, all)};
    }();
    return code;
}

PauliOperator error_label(ChannelKind kind, int index) {
    if (index < 0 || index >= static_cast<int>(kNumLabels)) {
        throw std::out_of_range("error_label: index must be 0..7");
    }
    if (index == 0) return PauliOperator(kBlockQubits);
    return single_error(error_kind(kind), static_cast<std::size_t>(index), kBlockQubits);
}

std::string error_label_name(ChannelKind kind, int index) {
    return error_label(kind, index).str();
}

std::optional<int> label_index(ChannelKind kind, const PauliOperator &error) {
    require_block(error, "label_index");
    if (error.is_scalar()) return 0;
    if (error.weight() != 1) return std::nullopt;
    for (int q = 1; q <= static_cast<int>(kBlockQubits); ++q) {
        if (error.same_support(error_label(kind, q))) return q;
    }
    return std::nullopt;
}

Syndrome syndrome_of(const PauliOperator &error) {
    require_block(error, "syndrome_of");
    const auto &generators = steane_code().generators;
    std::uint8_t bits = 0;
    for (std::size_t k = 0; k < kNumGenerators; ++k) {
        if (!commutes(error, generators[k])) bits |= std::uint8_t(1u << k);
    }
    return Syndrome(bits);
}

std::optional<int> lookup_label(Syndrome syndrome, ChannelKind kind) {
    const int xs = syndrome.x_check_triple();
    const int zs = syndrome.z_check_triple();
    switch (kind) {
        case ChannelKind::PhaseFlip:
            if (zs != 0) return std::nullopt;
            return xs;
        case ChannelKind::BitFlip:
            if (xs != 0) return std::nullopt;
            return zs;
        case ChannelKind::BitPhaseFlip:
            if (xs != zs) return std::nullopt;
            return xs;
    }
    return std::nullopt;
}

std::optional<PauliOperator> lookup_error(Syndrome syndrome, ChannelKind kind) {
    const auto label = lookup_label(syndrome, kind);
    if (!label) return std::nullopt;
    return error_label(kind, *label);
}

PauliOperator decode_any_single_error(Syndrome syndrome) {
    PauliOperator correction(kBlockQubits);
    if (const int zq = syndrome.x_check_triple(); zq != 0) {
        correction = correction * single_error(PauliKind::Z, static_cast<std::size_t>(zq), kBlockQubits);
    }
    if (const int xq = syndrome.z_check_triple(); xq != 0) {
        correction = correction * single_error(PauliKind::X, static_cast<std::size_t>(xq), kBlockQubits);
    }
    return correction;
}

Syndrome eve_view(Syndrome true_syndrome, SignMask mask) {
    return Syndrome(static_cast<std::uint8_t>(true_syndrome.packed() ^ mask.packed()));
}

SignMask mask_for_row(ChannelKind kind, int row) {
    if (row < 0 || row >= static_cast<int>(kNumLabels)) {
        throw std::out_of_range("mask_for_row: row must be 0..7");
    }
    switch (kind) {
        case ChannelKind::PhaseFlip: return SignMask(triple_to_bits(row, 1));
        case ChannelKind::BitFlip: return SignMask(triple_to_bits(row, 4));
        case ChannelKind::BitPhaseFlip:
            return SignMask(static_cast<std::uint8_t>(triple_to_bits(row, 1) | triple_to_bits(row, 4)));
    }
    throw std::invalid_argument("mask_for_row: unknown channel kind");
}

std::optional<int> row_of_mask(ChannelKind kind, SignMask mask) {
    for (int row = 0; row < static_cast<int>(kNumLabels); ++row) {
        if (mask_for_row(kind, row) == mask) return row;
    }
    return std::nullopt;
}

int correction_index(bool m1, bool m2, bool m3) {
    return 4 * int(m1) + 2 * int(m2) + int(m3);
}

bool equivalent_modulo_stabilizer(const PauliOperator &a, const PauliOperator &b) {
    require_block(a, "equivalent_modulo_stabilizer");
    require_block(b, "equivalent_modulo_stabilizer");
    const PauliOperator difference = a * b;
    if (!syndrome_of(difference).is_trivial()) return false;
    const auto &code = steane_code();
    return commutes(difference, code.logical_x) && commutes(difference, code.logical_z);
}

RemapTable remap_table(ChannelKind kind) {
    RemapTable table{};
    for (int row = 0; row < static_cast<int>(kNumLabels); ++row) {
        const SignMask mask = mask_for_row(kind, row);
        for (int column = 0; column < static_cast<int>(kNumLabels); ++column) {
            const Syndrome seen = eve_view(syndrome_of(error_label(kind, column)), mask);
            const auto label = lookup_label(seen, kind);
            if (!label) throw std::logic_error("remap_table: family mask produced unexpected syndrome");
            table[row][column] = *label;
        }
    }
    return table;
}

}  // namespace mgpd
