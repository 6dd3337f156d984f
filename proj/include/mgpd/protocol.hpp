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

#ifndef MGPD_PROTOCOL_HPP
#define MGPD_PROTOCOL_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mgpd/channel.hpp"
#include "mgpd/steane.hpp"
#include "mgpd/trial_stats.hpp"

namespace mgpd {

/// Upper bound on the per-direction modification probability:
/// min(delta / |1 - 8p|, 1/7). Near p = 1/8 (|1 - 8p| < eta) the ratio
/// diverges and the 1/7 cap applies.
double compute_pg_bound(double p, double delta, double eta = 1e-9);

/// Eight sign masks indexed by key digit; entry 0 is the empty mask.
struct StrategyClass {
    ChannelKind kind = ChannelKind::PhaseFlip;
    std::array<SignMask, kNumLabels> entries{};
};

/// Phase-flip: Original; g1; g2; g3; g1,g2; g1,g3; g2,g3; g1,g2,g3.
/// Bit-flip uses g4..g6, bit-phase-flip flips the pairs (k, k + 3).
StrategyClass strategy_class(ChannelKind kind);

/// Shared key: digits 0..7, applied cyclically to the block stream.
struct KeySequence {
    std::vector<std::uint8_t> digits;

    std::size_t size() const { return digits.size(); }
    std::size_t nonzero_count() const;
    /// Occurrences of each digit 0..7.
    std::array<std::size_t, kNumLabels> digit_counts() const;
    /// Nonzero digit counts differ by at most one.
    bool balanced() const;

    /// "0,1,2,0,3,4,0,5,6,7" (commas optional).
    static KeySequence parse(std::string_view text);
    std::string str() const;

    friend bool operator==(const KeySequence &, const KeySequence &) = default;
};

/// Deterministic key construction.
///
/// c = round(7 * p_g * L) nonzero digits; digits 1..7 receive floor(c/7)
/// occurrences each and the c mod 7 extras go to the lowest digits. Zeros sit
/// at positions floor(j * L / zeros); the remaining slots take nonzero digits
/// in round-robin order 1, 2, ..., 7, 1, 2, ... . For p_g = 0.1, L = 10 this
/// yields (0,1,2,0,3,4,0,5,6,7).
KeySequence build_key_sequence(double p_g, std::size_t length);

struct ProtocolConfig {
    ChannelParams channel;
    double p_g = 0.0;
    KeySequence key;
    std::uint64_t blocks = 0;
    std::uint64_t seed = 0;
    bool attack = false;
    unsigned workers = 1;

    /// Checks that a run is mechanically possible: valid channel, non-empty
    /// key with digits 0..7, at least one block.
    void check_runnable() const;
    /// check_runnable() plus the budget: p_g <= compute_pg_bound, the key is
    /// balanced and its nonzero fraction equals 7 p_g within 1/(2L).
    void validate() const;
};

struct BlockFrame {
    std::uint64_t index = 0;
    int key_digit = 0;
    SignMask mask;
    bool is_stego = false;
    std::optional<std::uint64_t> secret_id;
    PauliOperator true_error{kBlockQubits};
    Syndrome bob_syndrome;
    bool decode_success = false;
};

/// Requires secret_id to be present exactly when key_digit != 0: only stego
/// blocks carry payload.
BlockFrame encode_block(int key_digit, const StrategyClass &strategy,
                        std::optional<std::uint64_t> secret_id);

struct DecodeResult {
    Syndrome bob_syndrome;
    /// nullopt when the mask-adjusted syndrome is unexpected for the family.
    std::optional<PauliOperator> inferred_error;
    bool success = false;
};

/// Bob measures with the block's own projection directions, which cancels
/// the mask: his syndrome is syndrome_of(true_error). Success means his
/// correction undoes the error up to a stabilizer. Updates the frame.
DecodeResult bob_decode_block(BlockFrame &frame, ChannelKind kind);

/// One block of the protocol, deterministic in (config.seed, index).
struct BlockTrace {
    BlockFrame frame;
    PauliOperator channel1_error{kBlockQubits};
    Syndrome eve_syndrome;
    std::optional<int> eve_label;
    std::optional<int> bob_label;
};

BlockTrace simulate_block(const ProtocolConfig &config, const StrategyClass &strategy,
                          std::uint64_t index);

/// Runs config.blocks blocks and aggregates their statistics. Blocks are
/// split across config.workers threads; the result is bit-identical for any
/// worker count.
TrialStats run_protocol(const ProtocolConfig &config);

}  // namespace mgpd

#endif  // MGPD_PROTOCOL_HPP
