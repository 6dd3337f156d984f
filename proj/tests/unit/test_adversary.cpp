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

#include <doctest.h>

#include <array>
#include <cmath>
#include <stdexcept>

#include "mgpd/adversary.hpp"
#include "mgpd/protocol.hpp"

using namespace mgpd;

namespace {

TrialStats run(double p, double delta, const std::string &key, std::uint64_t blocks, std::uint64_t seed, bool attack) {
    ProtocolConfig c;
    c.channel = {ChannelKind::PhaseFlip, p, delta, 0.0};
    c.p_g = compute_pg_bound(p, delta);
    c.key = key.empty() ? build_key_sequence(c.p_g, 10) : KeySequence::parse(key);
    c.blocks = blocks;
    c.seed = seed;
    c.attack = attack;
    return run_protocol(c);
}

}  // namespace

TEST_CASE("Eve decodes with the original directions") {
    const auto z = [](std::size_t q) { return single_error(PauliKind::Z, q, kBlockQubits); };
    CHECK(eve_decode(z(6), SignMask::of({1}), ChannelKind::PhaseFlip)->str() == "Z2");
    CHECK(eve_decode(PauliOperator(kBlockQubits), SignMask::of({1}), ChannelKind::PhaseFlip)->str() == "Z4");
    CHECK(eve_decode(z(1), SignMask::of({1}), ChannelKind::PhaseFlip)->str() == "Z5");
    for (int j = 0; j < 8; ++j) {
        for (ChannelKind kind : kAllChannelKinds) {
            CHECK(*eve_decode(error_label(kind, j), SignMask{}, kind) == error_label(kind, j));
        }
    }
    CHECK_FALSE(eve_decode(z(1), SignMask::of({4}), ChannelKind::PhaseFlip).has_value());
}

TEST_CASE("residual after Eve's correction carries exactly the mask pattern") {
    for (ChannelKind kind : kAllChannelKinds) {
        for (int row = 0; row < 8; ++row) {
            const SignMask mask = mask_for_row(kind, row);
            for (int j = 0; j < 8; ++j) {
                const PauliOperator e1 = error_label(kind, j);
                const PauliOperator residual = *eve_decode(e1, mask, kind) * e1;
                CHECK(syndrome_of(residual).packed() == mask.packed());
                // Same syndrome as the family error of the mask row, so the two
                // differ by an element of the normalizer (possibly a logical).
                const PauliOperator diff = residual * error_label(kind, row);
                for (const auto &g : steane_code().generators) CHECK(commutes(diff, g));
            }
        }
    }
}

TEST_CASE("intercept-resend with no mask leaves no residual") {
    const ChannelParams params{ChannelKind::PhaseFlip, 0.1, 0.0, 0.0};
    for (std::uint64_t i = 0; i < 500; ++i) {
        BlockStream s(3, i);
        const InterceptOutcome o = intercept_resend(SignMask{}, ChannelKind::PhaseFlip, params, s);
        CHECK(o.residual.is_scalar());
        CHECK(o.total().same_support(o.channel2_error));
    }
    BlockStream s(1, 1);
    CHECK_THROWS_AS(intercept_resend(SignMask::of({4}), ChannelKind::PhaseFlip, params, s), std::logic_error);
}

TEST_CASE("Bob's label distribution after interception is the permuted clean distribution") {
    constexpr double kCritical = 24.322;  // chi-square, 7 dof, 0.001
    for (ChannelKind kind : kAllChannelKinds) {
        const ChannelParams params{kind, 0.05, 0.0, 0.0};
        const SignMask mask = mask_for_row(kind, 4);
        constexpr std::uint64_t n = 100000;
        std::array<double, 8> counts{};
        for (std::uint64_t i = 0; i < n; ++i) {
            BlockStream s(17, i);
            const InterceptOutcome o = intercept_resend(mask, kind, params, s);
            const auto label = lookup_label(syndrome_of(o.total()), kind);
            REQUIRE(label.has_value());
            counts[*label] += 1.0;
        }
        double chi2 = 0.0;
        for (int j = 0; j < 8; ++j) {
            const double expected = n * (j == 4 ? 1.0 - 7.0 * 0.05 : 0.05);
            chi2 += (counts[j] - expected) * (counts[j] - expected) / expected;
        }
        CHECK(chi2 < kCritical);
    }
}

TEST_CASE("detection on a clean run") {
    const TrialStats s = run(0.1, 0.02, "", 100000, 8, false);
    const DetectionReport r = bob_eavesdrop_detect(s, {ChannelKind::PhaseFlip, 0.1, 0.02, 0.0});
    CHECK(r.verdict == Verdict::Clean);
    CHECK(r.alpha == 0.001);
    REQUIRE(r.positions.size() == 10);
    for (const auto &pos : r.positions) {
        CHECK(pos.status == PositionStatus::Clean);
        CHECK(pos.samples == 10000);
        CHECK(std::abs(pos.identity_freq - 0.3) < 0.02);
    }
}

TEST_CASE("detection on an attacked run") {
    const TrialStats s = run(0.05, 0.06, "", 100000, 9, true);
    const DetectionReport r = bob_eavesdrop_detect(s, {ChannelKind::PhaseFlip, 0.05, 0.06, 0.0});
    CHECK(r.verdict == Verdict::EavesdropperDetected);
    std::size_t flagged = 0;
    for (const auto &pos : r.positions) flagged += pos.status == PositionStatus::Flagged;
    CHECK(flagged == 7);
    CHECK(std::abs(r.positions[1].identity_freq - 0.05) < 0.01);
    CHECK(std::abs(r.positions[1].dominant_error_freq - 0.65) < 0.02);
    CHECK(std::abs(r.positions[1].identity_z) > 100.0);
}

TEST_CASE("noise-free interception is a deterministic anomaly") {
    const TrialStats s = run(0.0, 0.0, "1", 1000, 4, true);
    const DetectionReport r = bob_eavesdrop_detect(s, {ChannelKind::PhaseFlip, 0.0, 0.0, 0.0});
    CHECK(r.verdict == Verdict::EavesdropperDetected);
    CHECK(r.positions[0].identity_freq == 0.0);
    CHECK(r.positions[0].dominant_label == 4);
    CHECK(r.positions[0].dominant_error_freq == 1.0);
}

TEST_CASE("short positions are inconclusive") {
    const TrialStats s = run(0.05, 0.06, "", 500, 4, true);
    DetectionOptions options;
    options.min_samples = 100;
    const DetectionReport r = bob_eavesdrop_detect(s, {ChannelKind::PhaseFlip, 0.05, 0.06, 0.0}, options);
    for (const auto &pos : r.positions) CHECK(pos.status == PositionStatus::Inconclusive);
    CHECK(r.verdict == Verdict::Clean);
    options.alpha = 0.0;
    CHECK_THROWS_AS(bob_eavesdrop_detect(s, {ChannelKind::PhaseFlip, 0.05, 0.06, 0.0}, options), std::invalid_argument);
}

TEST_CASE("Eve's steganalysis") {
    const ChannelParams params{ChannelKind::PhaseFlip, 0.1, 0.02, 0.0};
    const TrialStats compliant = run(0.1, 0.02, "", 100000, 12, false);
    const SteganalysisVerdict v = eve_steganalysis(compliant.per_qubit_error_counts, params, 100000);
    CHECK_FALSE(v.suspicious);
    for (double f : v.frequencies) CHECK(std::abs(f - 0.12) < 0.005);

    const ChannelParams tight{ChannelKind::PhaseFlip, 0.01, 0.001, 0.0};
    const TrialStats naive = run(0.01, 0.001, "1", 100000, 12, false);
    const SteganalysisVerdict nv = eve_steganalysis(naive.per_qubit_error_counts, tight, 100000);
    CHECK(nv.suspicious);
    CHECK(nv.frequencies[3] > 0.9);

    const TrialStats honest = run(0.1, 0.0, "", 100000, 12, false);
    CHECK_FALSE(eve_steganalysis(honest.per_qubit_error_counts, params, 100000).suspicious);

    // Frequencies inside the band have non-positive excess.
    const std::array<std::uint64_t, 7> inside = {110, 110, 110, 110, 110, 110, 110};
    const SteganalysisVerdict in = eve_steganalysis(inside, params, 1000);
    for (double z : in.band_z) CHECK(z < 0.0);
    CHECK_THROWS_AS(eve_steganalysis(inside, params, 0), std::invalid_argument);
    CHECK_THROWS_AS(eve_steganalysis(inside, params, 100), std::invalid_argument);
}
