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

#include "mgpd/trial_stats.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace mgpd {

TrialStats::TrialStats(ChannelKind kind_, std::size_t key_length)
    : kind(kind_),
      identity_counts_per_key_position(key_length, 0),
      block_counts_per_key_position(key_length, 0),
      label_counts_per_key_position(key_length, LabelCounts{}) {}

void TrialStats::merge(const TrialStats &other) {
    if (other.kind != kind || other.key_length() != key_length()) {
        throw std::invalid_argument("TrialStats::merge: incompatible stats");
    }
    for (std::size_t q = 0; q < kBlockQubits; ++q) per_qubit_error_counts[q] += other.per_qubit_error_counts[q];
    for (std::size_t l = 0; l < kNumLabels; ++l) eve_inferred_error_counts[l] += other.eve_inferred_error_counts[l];
    for (std::size_t t = 0; t < key_length(); ++t) {
        identity_counts_per_key_position[t] += other.identity_counts_per_key_position[t];
        block_counts_per_key_position[t] += other.block_counts_per_key_position[t];
        for (std::size_t l = 0; l < kNumLabels; ++l) {
            label_counts_per_key_position[t][l] += other.label_counts_per_key_position[t][l];
        }
    }
    decode_success_count += other.decode_success_count;
    unexpected_syndrome_count += other.unexpected_syndrome_count;
    bob_unexpected_count += other.bob_unexpected_count;
    stego_block_count += other.stego_block_count;
    delivered_secret_count += other.delivered_secret_count;
    total_blocks += other.total_blocks;
}

void TrialStats::check_invariants() const {
    auto fail = [](const std::string &what) {
        throw std::logic_error("TrialStats invariant violated: " + what);
    };
    for (auto c : per_qubit_error_counts) {
        if (c > total_blocks) fail("per-qubit count exceeds total_blocks");
    }
    for (auto c : {decode_success_count, unexpected_syndrome_count, bob_unexpected_count,
                   stego_block_count, delivered_secret_count}) {
        if (c > total_blocks) fail("counter exceeds total_blocks");
    }
    if (delivered_secret_count > stego_block_count) fail("delivered secrets exceed stego blocks");
    const auto sum = [](const auto &v) { return std::accumulate(v.begin(), v.end(), std::uint64_t{0}); };
    if (sum(block_counts_per_key_position) != total_blocks) fail("per-position blocks do not sum to total");
    if (sum(eve_inferred_error_counts) + unexpected_syndrome_count != total_blocks) {
        fail("Eve label counts do not sum to total");
    }
    for (std::size_t t = 0; t < key_length(); ++t) {
        if (identity_counts_per_key_position[t] != label_counts_per_key_position[t][0]) {
            fail("identity count disagrees with label counts");
        }
        if (sum(label_counts_per_key_position[t]) > block_counts_per_key_position[t]) {
            fail("label counts exceed position block count");
        }
    }
}

}  // namespace mgpd
