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

#include "mgpd/io.hpp"

#include <cstdio>
#include <stdexcept>

namespace mgpd::io {

namespace {

std::string complex_str(dense::Complex c) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", c.real(), c.imag());
    return buf;
}

template <typename T>
T field(const Json &j, const char *name) {
    if (!j.contains(name)) throw std::invalid_argument(std::string("missing field '") + name + "'");
    return j.at(name).get<T>();
}

Json maybe(const metrics::MaybeValue &v) { return v ? Json(*v) : Json("undefined"); }

}  // namespace

std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hash_hex(std::string_view text) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(text)));
    return buf;
}

Json provenance(std::string_view command, std::string_view config_hash) {
    Json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = command;
    j["config_hash"] = config_hash;
    return j;
}

Json to_json(const ChannelParams &params) {
    Json j;
    j["kind"] = to_string(params.kind);
    j["p"] = params.p;
    j["delta"] = params.delta;
    j["slack"] = params.slack;
    return j;
}

ChannelParams channel_params_from_json(const Json &j) {
    ChannelParams params;
    params.kind = parse_channel_kind(field<std::string>(j, "kind"));
    params.p = field<double>(j, "p");
    params.delta = field<double>(j, "delta");
    params.slack = j.value("slack", 0.0);
    params.validate();
    return params;
}

Json to_json(const ProtocolConfig &config) {
    Json j = to_json(config.channel);
    j["p_g"] = config.p_g;
    j["key"] = config.key.str();
    j["blocks"] = config.blocks;
    j["seed"] = config.seed;
    j["attack"] = config.attack;
    j["workers"] = config.workers;
    return j;
}

std::string canonical(const ProtocolConfig &config) {
    Json j = to_json(config);
    j.erase("workers");
    return j.dump();
}

Json to_json(const TrialStats &stats) {
    Json j;
    j["kind"] = to_string(stats.kind);
    j["total_blocks"] = stats.total_blocks;
    j["per_qubit_error_counts"] = stats.per_qubit_error_counts;
    j["eve_inferred_error_counts"] = stats.eve_inferred_error_counts;
    j["identity_counts_per_key_position"] = stats.identity_counts_per_key_position;
    j["block_counts_per_key_position"] = stats.block_counts_per_key_position;
    j["label_counts_per_key_position"] = stats.label_counts_per_key_position;
    j["decode_success_count"] = stats.decode_success_count;
    j["unexpected_syndrome_count"] = stats.unexpected_syndrome_count;
    j["bob_unexpected_count"] = stats.bob_unexpected_count;
    j["stego_block_count"] = stats.stego_block_count;
    j["delivered_secret_count"] = stats.delivered_secret_count;
    return j;
}

TrialStats trial_stats_from_json(const Json &j) {
    try {
        const auto blocks = field<std::vector<std::uint64_t>>(j, "block_counts_per_key_position");
        TrialStats stats(parse_channel_kind(field<std::string>(j, "kind")), blocks.size());
        stats.block_counts_per_key_position = blocks;
        stats.total_blocks = field<std::uint64_t>(j, "total_blocks");
        stats.per_qubit_error_counts = field<std::array<std::uint64_t, kBlockQubits>>(j, "per_qubit_error_counts");
        stats.eve_inferred_error_counts = field<LabelCounts>(j, "eve_inferred_error_counts");
        stats.identity_counts_per_key_position = field<std::vector<std::uint64_t>>(j, "identity_counts_per_key_position");
        stats.label_counts_per_key_position = field<std::vector<LabelCounts>>(j, "label_counts_per_key_position");
        stats.decode_success_count = field<std::uint64_t>(j, "decode_success_count");
        stats.unexpected_syndrome_count = field<std::uint64_t>(j, "unexpected_syndrome_count");
        stats.bob_unexpected_count = field<std::uint64_t>(j, "bob_unexpected_count");
        stats.stego_block_count = field<std::uint64_t>(j, "stego_block_count");
        stats.delivered_secret_count = field<std::uint64_t>(j, "delivered_secret_count");
        if (stats.identity_counts_per_key_position.size() != blocks.size() ||
            stats.label_counts_per_key_position.size() != blocks.size()) {
            throw std::invalid_argument("per-position arrays differ in length");
        }
        stats.check_invariants();
        return stats;
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(std::string("malformed stats: ") + e.what());
    } catch (const std::logic_error &e) {
        throw std::invalid_argument(std::string("malformed stats: ") + e.what());
    }
}

Json to_json(const DetectionReport &report) {
    Json j;
    j["verdict"] = to_string(report.verdict);
    j["alpha"] = report.alpha;
    j["z_threshold"] = report.z_threshold;
    Json freq = Json::array(), z = Json::array(), dominant = Json::array(), positions = Json::array();
    for (const auto &p : report.positions) {
        freq.push_back(p.identity_freq);
        z.push_back(p.identity_z);
        dominant.push_back(p.dominant_error_freq);
        Json pj;
        pj["position"] = p.position;
        pj["samples"] = p.samples;
        pj["status"] = to_string(p.status);
        pj["identity_freq"] = p.identity_freq;
        pj["identity_z"] = p.identity_z;
        pj["dominant_label"] = p.dominant_label;
        pj["dominant_error_freq"] = p.dominant_error_freq;
        pj["max_error_z"] = p.max_error_z;
        positions.push_back(std::move(pj));
    }
    j["per_position_identity_freq"] = std::move(freq);
    j["z_scores"] = std::move(z);
    j["dominant_error_freqs"] = std::move(dominant);
    j["positions"] = std::move(positions);
    return j;
}

Json to_json(const SteganalysisVerdict &verdict) {
    Json j;
    j["suspicious"] = verdict.suspicious;
    j["frame_len"] = verdict.frame_len;
    j["alpha"] = verdict.alpha;
    j["z_threshold"] = verdict.z_threshold;
    j["frequencies"] = verdict.frequencies;
    j["band_z"] = verdict.band_z;
    return j;
}

Json to_json(const GoldenCheck &check) {
    auto rows = [](const std::vector<TableMismatch> &list) {
        Json a = Json::array();
        for (const auto &m : list) {
            a.push_back({{"row", m.row}, {"column", m.column}, {"published", m.published}, {"generated", m.generated}});
        }
        return a;
    };
    Json j;
    j["name"] = check.name;
    j["passed"] = check.passed();
    j["entries_compared"] = check.entries_compared;
    j["mismatches"] = rows(check.mismatches);
    j["known_discrepancies"] = rows(check.known_discrepancies);
    return j;
}

Json to_json(const dense::PropositionReport &r) {
    Json j;
    j["case"] = r.case_id;
    j["h"] = r.h;
    j["e_i"] = r.e_i.str();
    j["e_j"] = r.e_j.str();
    j["lhs_norm"] = r.lhs_norm;
    j["proportional_to_p"] = r.proportional_to_p;
    j["proportionality_constant"] = complex_str(r.proportionality_constant);
    j["residual_norm"] = r.residual_norm;
    j["relative_residual"] = r.relative_residual;
    j["alpha"] = complex_str(r.alpha);
    j["matches_zero"] = r.matches_zero;
    j["alternative_form_residual"] = r.alternative_form_residual;
    j["matches_alternative_form"] = r.matches_alternative_form;
    return j;
}

Json to_json(const dense::CheckResult &check) {
    Json j;
    j["name"] = check.name;
    j["passed"] = check.passed;
    j["measured"] = check.measured;
    j["tolerance"] = check.tolerance;
    if (!check.detail.empty()) j["detail"] = check.detail;
    return j;
}

Json to_json(const std::vector<metrics::CurvePoint> &points) {
    Json a = Json::array();
    for (const auto &point : points) {
        Json series;
        for (const auto &s : point.series) series[s.scheme] = maybe(s.value);
        a.push_back({{"figure_id", metrics::to_string(point.figure)}, {"x", point.x}, {"series", std::move(series)}});
    }
    return a;
}

}  // namespace mgpd::io
