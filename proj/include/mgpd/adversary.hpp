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

#ifndef MGPD_ADVERSARY_HPP
#define MGPD_ADVERSARY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mgpd/channel.hpp"
#include "mgpd/steane.hpp"
#include "mgpd/trial_stats.hpp"

namespace mgpd {

/// Eve decodes with the original projection directions; she is unaware of `mask`.
std::optional<PauliOperator> eve_decode(const PauliOperator &true_error, SignMask mask, ChannelKind kind);

struct InterceptOutcome {
    PauliOperator channel1_error;
    PauliOperator eve_correction;
    /// eve_correction * channel1_error; its syndrome is the mask pattern.
    PauliOperator residual;
    PauliOperator channel2_error;

    /// Error relative to Alice's encoded state when the block reaches Bob.
    PauliOperator total() const { return channel2_error * residual; }
};

/// Measure in the original directions, apply the inferred correction, resend
/// through a second channel with the same parameters. Draws channel 1 then
/// channel 2 from `stream`.
InterceptOutcome intercept_resend(SignMask mask, ChannelKind kind, const ChannelParams &params,
                                  BlockStream &stream);

enum class PositionStatus { Clean, Flagged, Inconclusive };
enum class Verdict { Clean, EavesdropperDetected };

std::string_view to_string(PositionStatus status);
std::string_view to_string(Verdict verdict);

struct DetectionOptions {
    double alpha = 0.001;
    /// Positions with fewer blocks are reported inconclusive.
    std::uint64_t min_samples = 100;
};

struct PositionDetection {
    std::size_t position = 0;
    std::uint64_t samples = 0;
    PositionStatus status = PositionStatus::Inconclusive;
    double identity_freq = 0.0;
    double identity_z = 0.0;
    int dominant_label = 0;          // most frequent non-identity label
    double dominant_error_freq = 0.0;
    double max_error_z = 0.0;        // largest |z| over the seven error labels
};

struct DetectionReport {
    Verdict verdict = Verdict::Clean;
    double alpha = 0.0;
    /// Two-sided critical |z|; Bonferroni over the eight labels of a position.
    double z_threshold = 0.0;
    std::vector<PositionDetection> positions;
};

/// Per key position: binomial z-test of Bob's identity frequency against
/// 1 - 7p and of every single-error label against p. A position is flagged
/// when any |z| exceeds the threshold; the verdict is detected when any
/// position is flagged.
DetectionReport bob_eavesdrop_detect(const TrialStats &stats, const ChannelParams &params,
                                     const DetectionOptions &options = {});

struct SteganalysisVerdict {
    bool suspicious = false;
    std::uint64_t frame_len = 0;
    double alpha = 0.0;
    double z_threshold = 0.0;
    std::array<double, kBlockQubits> frequencies{};
    /// Excess over the tolerance band [p, p + delta] in standard errors.
    std::array<double, kBlockQubits> band_z{};
};

/// Eve's statistical test: each qubit's error frequency over `frame_len`
/// blocks must stay inside [p, p + delta]. One-sided tests at each band
/// edge, Bonferroni over 7 qubits x 2 edges.
SteganalysisVerdict eve_steganalysis(std::span<const std::uint64_t, kBlockQubits> counts,
                                     const ChannelParams &params, std::uint64_t frame_len,
                                     double alpha = 0.01);

}  // namespace mgpd

#endif  // MGPD_ADVERSARY_HPP
