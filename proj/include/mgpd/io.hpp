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

// JSON forms of the simulator's records and output provenance.

#ifndef MGPD_IO_HPP
#define MGPD_IO_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mgpd/adversary.hpp"
#include "mgpd/dense.hpp"
#include "mgpd/metrics.hpp"
#include "mgpd/protocol.hpp"
#include "mgpd/tables.hpp"
#include "mgpd/trial_stats.hpp"

namespace mgpd::io {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kToolName = "mgpd";
inline constexpr std::string_view kToolVersion = "1.0.0";

std::uint64_t fnv1a64(std::string_view text);
/// 16 lowercase hex digits of fnv1a64(text).
std::string hash_hex(std::string_view text);

/// {"tool", "version", "config_hash"} header placed first in every document.
Json provenance(std::string_view command, std::string_view config_hash);

Json to_json(const ChannelParams &params);
ChannelParams channel_params_from_json(const Json &j);

Json to_json(const ProtocolConfig &config);
/// Canonical text of everything that determines a run's results (worker
/// count excluded).
std::string canonical(const ProtocolConfig &config);

Json to_json(const TrialStats &stats);
/// Throws std::invalid_argument on missing fields or broken invariants.
TrialStats trial_stats_from_json(const Json &j);

Json to_json(const DetectionReport &report);
Json to_json(const SteganalysisVerdict &verdict);
Json to_json(const GoldenCheck &check);
Json to_json(const dense::PropositionReport &report);
Json to_json(const dense::CheckResult &check);
Json to_json(const std::vector<metrics::CurvePoint> &points);

}  // namespace mgpd::io

#endif  // MGPD_IO_HPP
