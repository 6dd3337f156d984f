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

#ifndef MGPD_TRIAL_STATS_HPP
#define MGPD_TRIAL_STATS_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "mgpd/steane.hpp"

namespace mgpd {

using LabelCounts = std::array<std::uint64_t, kNumLabels>;

/// Aggregated Monte Carlo counters. All fields are plain sums, so merging
/// partial results is order independent.
struct TrialStats {
    ChannelKind kind = ChannelKind::PhaseFlip;

    /// Eve-visible single-qubit errors: index q-1 counts blocks where an
    /// original-direction measurement reported E_q.
    std::array<std::uint64_t, kBlockQubits> per_qubit_error_counts{};
    /// Eve's inferred label per block (index 0 = I).
    LabelCounts eve_inferred_error_counts{};

    /// Indexed by key position t mod L.
    std::vector<std::uint64_t> identity_counts_per_key_position;
    std::vector<std::uint64_t> block_counts_per_key_position;
    /// Bob's mask-adjusted equivalent error label per key position.
    std::vector<LabelCounts> label_counts_per_key_position;

    std::uint64_t decode_success_count = 0;
    /// Blocks whose original-direction syndrome matched no single error.
    std::uint64_t unexpected_syndrome_count = 0;
    /// Blocks whose mask-adjusted syndrome matched no single error.
    std::uint64_t bob_unexpected_count = 0;
    std::uint64_t stego_block_count = 0;
    /// Stego blocks whose payload Bob recovered.
    std::uint64_t delivered_secret_count = 0;
    std::uint64_t total_blocks = 0;

    TrialStats() = default;
    TrialStats(ChannelKind kind, std::size_t key_length);

    std::size_t key_length() const { return block_counts_per_key_position.size(); }

    void merge(const TrialStats &other);

    /// Throws std::logic_error when a counter exceeds total_blocks or the
    /// per-position counters do not sum to total_blocks.
    void check_invariants() const;

    friend bool operator==(const TrialStats &, const TrialStats &) = default;
};

}  // namespace mgpd

#endif  // MGPD_TRIAL_STATS_HPP
