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

#include "mgpd/adversary.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mgpd/statistics.hpp"

namespace mgpd {

std::optional<PauliOperator> eve_decode(const PauliOperator &true_error, SignMask mask, ChannelKind kind) {
    return lookup_error(eve_view(syndrome_of(true_error), mask), kind);
}

InterceptOutcome intercept_resend(SignMask mask, ChannelKind kind, const ChannelParams &params,
                                  BlockStream &stream) {
    const PauliOperator e1 = sample_block_error(params, stream);
    const auto correction = eve_decode(e1, mask, kind);
    if (!correction) {
        throw std::logic_error("intercept_resend: mask " + mask.str() + " is not a " +
                               std::string(to_string(kind)) + " strategy");
    }
    const PauliOperator residual = *correction * e1;
    const PauliOperator e2 = sample_block_error(params, stream);
    return {e1, *correction, residual, e2};
}

std::string_view to_string(PositionStatus status) {
    switch (status) {
        case PositionStatus::Clean: return "clean";
        case PositionStatus::Flagged: return "flagged";
        case PositionStatus::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

std::string_view to_string(Verdict verdict) {
    return verdict == Verdict::Clean ? "clean" : "eavesdropper-detected";
}

DetectionReport bob_eavesdrop_detect(const TrialStats &stats, const ChannelParams &params,
                                     const DetectionOptions &options) {
    params.validate();
    if (!(options.alpha > 0.0 && options.alpha < 1.0)) {
        throw std::invalid_argument("bob_eavesdrop_detect: alpha must be in (0,1)");
    }
    DetectionReport report;
    report.alpha = options.alpha;
    report.z_threshold = stats::normal_upper_quantile(options.alpha / (2.0 * kNumLabels));

    const double identity_expected = 1.0 - 7.0 * params.p;
    for (std::size_t t = 0; t < stats.key_length(); ++t) {
        PositionDetection pos;
        pos.position = t;
        pos.samples = stats.block_counts_per_key_position[t];
        const LabelCounts &labels = stats.label_counts_per_key_position[t];
        if (pos.samples > 0) {
            const double n = static_cast<double>(pos.samples);
            pos.identity_freq = static_cast<double>(labels[0]) / n;
            const auto dominant = std::max_element(labels.begin() + 1, labels.end());
            pos.dominant_label = static_cast<int>(dominant - labels.begin());
            pos.dominant_error_freq = static_cast<double>(*dominant) / n;
        }
        if (pos.samples < std::max<std::uint64_t>(options.min_samples, 1)) {
            pos.status = PositionStatus::Inconclusive;
            report.positions.push_back(pos);
            continue;
        }
        pos.identity_z = stats::binomial_z(labels[0], pos.samples, identity_expected);
        for (std::size_t l = 1; l < kNumLabels; ++l) {
            const double z = stats::binomial_z(labels[l], pos.samples, params.p);
            if (std::abs(z) > std::abs(pos.max_error_z)) pos.max_error_z = z;
        }
        const bool flagged = std::abs(pos.identity_z) > report.z_threshold ||
                             std::abs(pos.max_error_z) > report.z_threshold;
        pos.status = flagged ? PositionStatus::Flagged : PositionStatus::Clean;
        if (flagged) report.verdict = Verdict::EavesdropperDetected;
        report.positions.push_back(pos);
    }
    return report;
}

SteganalysisVerdict eve_steganalysis(std::span<const std::uint64_t, kBlockQubits> counts,
                                     const ChannelParams &params, std::uint64_t frame_len,
                                     double alpha) {
    params.validate();
    if (frame_len == 0) throw std::invalid_argument("eve_steganalysis: empty frame");
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("eve_steganalysis: alpha must be in (0,1)");

    SteganalysisVerdict verdict;
    verdict.frame_len = frame_len;
    verdict.alpha = alpha;
    verdict.z_threshold = stats::normal_upper_quantile(alpha / (2.0 * kBlockQubits));

    const double low = params.p;
    const double high = std::min(1.0, params.p + params.delta);
    for (std::size_t q = 0; q < kBlockQubits; ++q) {
        if (counts[q] > frame_len) throw std::invalid_argument("eve_steganalysis: count exceeds frame length");
        verdict.frequencies[q] = static_cast<double>(counts[q]) / static_cast<double>(frame_len);
        const double above = stats::binomial_z(counts[q], frame_len, high);
        const double below = -stats::binomial_z(counts[q], frame_len, low);
        verdict.band_z[q] = std::max(above, below);
        if (verdict.band_z[q] > verdict.z_threshold) verdict.suspicious = true;
    }
    return verdict;
}

}  // namespace mgpd
