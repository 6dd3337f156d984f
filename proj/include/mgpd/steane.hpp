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

#ifndef MGPD_STEANE_HPP
#define MGPD_STEANE_HPP

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>

#include "mgpd/pauli.hpp"

namespace mgpd {

inline constexpr std::size_t kBlockQubits = 7;
inline constexpr std::size_t kNumGenerators = 6;
/// Error labels per channel family: I, E_1 .. E_7.
inline constexpr std::size_t kNumLabels = 8;

/// Single-type Pauli channel family.
enum class ChannelKind : std::uint8_t { BitFlip, PhaseFlip, BitPhaseFlip };

inline constexpr std::array<ChannelKind, 3> kAllChannelKinds = {
    ChannelKind::BitFlip, ChannelKind::PhaseFlip, ChannelKind::BitPhaseFlip};

std::string_view to_string(ChannelKind kind);
/// Accepts "bit-flip", "phase-flip", "bit-phase-flip" (and the short forms bc, pc, bpc).
ChannelKind parse_channel_kind(std::string_view text);
/// The Pauli applied by the channel: X, Z or Y.
PauliKind error_kind(ChannelKind kind);

/// Six bits ordered g1..g6. Bit k is set when the error anticommutes with g_k
/// (measurement outcome 1 in the original projection directions).
class Syndrome {
public:
    constexpr Syndrome() = default;
    constexpr explicit Syndrome(std::uint8_t packed) : bits_(packed & 0x3F) {}

    /// "110000" with g1 leftmost.
    static Syndrome parse(std::string_view text);

    bool bit(std::size_t generator) const;
    std::uint8_t packed() const { return bits_; }
    bool is_trivial() const { return bits_ == 0; }

    /// (g1, g2, g3) read as a binary number with g1 most significant.
    int x_check_triple() const;
    /// (g4, g5, g6) read the same way.
    int z_check_triple() const;

    std::string str() const;

    friend bool operator==(Syndrome, Syndrome) = default;

private:
    std::uint8_t bits_ = 0;
};

/// Which generators have their projection direction flipped to -g_k. Same bit
/// layout as Syndrome.
class SignMask {
public:
    constexpr SignMask() = default;
    constexpr explicit SignMask(std::uint8_t packed) : bits_(packed & 0x3F) {}

    /// Mask flipping the listed generators (1-based).
    static SignMask of(std::initializer_list<int> generators);
    /// Accepts "Original"/"none"/"" for the empty mask, otherwise "g1,g2" style lists.
    static SignMask parse(std::string_view text);

    bool flipped(std::size_t generator) const;
    std::uint8_t packed() const { return bits_; }
    bool empty() const { return bits_ == 0; }
    int sign(std::size_t generator) const { return flipped(generator) ? -1 : 1; }

    /// "Original" for the empty mask, otherwise "g1,g2,g3".
    std::string str() const;

    friend bool operator==(SignMask, SignMask) = default;

private:
    std::uint8_t bits_ = 0;
};

struct CodeDefinition {
    std::array<PauliOperator, kNumGenerators> generators;
    PauliOperator logical_x;
    PauliOperator logical_z;
};

/// The (7,1,3) code: g1..g3 are X-type and g4..g6 Z-type on the qubit sets
/// {4,5,6,7}, {2,3,6,7}, {1,3,5,7}. X-bar and Z-bar act on all seven qubits.
const CodeDefinition &steane_code();

/// E_b for b in 0..7 (E_0 = I): Z_b, X_b or Y_b depending on the family.
PauliOperator error_label(ChannelKind kind, int index);
/// "I", "Z4", ...
std::string error_label_name(ChannelKind kind, int index);
/// Inverse of error_label() up to phase; nullopt if the operator is not I or a
/// single error of the family.
std::optional<int> label_index(ChannelKind kind, const PauliOperator &error);

Syndrome syndrome_of(const PauliOperator &error);

/// Single-error lookup for one channel family. nullopt marks a syndrome that
/// no single error of the family produces (an "unexpected" syndrome).
std::optional<PauliOperator> lookup_error(Syndrome syndrome, ChannelKind kind);
/// Family-specific label index of lookup_error(), nullopt when unexpected.
std::optional<int> lookup_label(Syndrome syndrome, ChannelKind kind);

/// Independent X/Z decoding for arbitrary single-qubit errors: the x-check
/// triple selects a Z correction and the z-check triple an X correction.
PauliOperator decode_any_single_error(Syndrome syndrome);

/// Syndrome seen by someone measuring in the original directions when the
/// state was encoded with `mask`.
Syndrome eve_view(Syndrome true_syndrome, SignMask mask);

/// Mask whose family triple encodes `row` (0..7, g with the lowest index is
/// the weight-4 bit). Bit-phase-flip rows flip matched pairs (k, k + 3).
SignMask mask_for_row(ChannelKind kind, int row);
/// Inverse of mask_for_row(); nullopt when the mask is not of the family.
std::optional<int> row_of_mask(ChannelKind kind, SignMask mask);

/// Linear weighting of the three ancilla outcomes: j = 4*m1 + 2*m2 + m3.
int correction_index(bool m1, bool m2, bool m3);

/// True when a and b differ by an element of the stabilizer group (up to
/// phase), i.e. applying b to undo a restores the encoded state.
bool equivalent_modulo_stabilizer(const PauliOperator &a, const PauliOperator &b);

/// Entry [row][column]: label index of the error Eve infers when the true
/// error is E_column and the directions of mask_for_row(kind, row) are flipped.
using RemapTable = std::array<std::array<int, kNumLabels>, kNumLabels>;
RemapTable remap_table(ChannelKind kind);

/// Order in which the published remap table lists its rows:
/// Original, g1, g2, g3, g1g2, g1g3, g2g3, g1g2g3.
inline constexpr std::array<int, kNumLabels> kStrategyRowOrder = {0, 4, 2, 1, 6, 5, 3, 7};

}  // namespace mgpd

#endif  // MGPD_STEANE_HPP
