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

// End-to-end acceptance run: one PASS/FAIL line per criterion, nonzero exit
// status when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mgpd/adversary.hpp"
#include "mgpd/dense.hpp"
#include "mgpd/metrics.hpp"
#include "mgpd/protocol.hpp"
#include "mgpd/statistics.hpp"
#include "mgpd/tables.hpp"

using namespace mgpd;

namespace {

struct Outcome {
    bool passed = true;
    std::ostringstream detail;

    void require(bool ok, const std::string &what) {
        if (!ok) {
            passed = false;
            detail << " [failed: " << what << "]";
        }
    }
};

ProtocolConfig compliant(double p, double delta, std::uint64_t blocks, std::uint64_t seed, bool attack) {
    ProtocolConfig c;
    c.channel = {ChannelKind::PhaseFlip, p, delta, 0.0};
    c.p_g = compute_pg_bound(p, delta);
    c.key = build_key_sequence(c.p_g, 10);
    c.blocks = blocks;
    c.seed = seed;
    c.attack = attack;
    c.validate();
    return c;
}

bool is_permutation(const std::array<int, kNumLabels> &values) {
    std::set<int> seen(values.begin(), values.end());
    return seen.size() == kNumLabels && *seen.begin() == 0 && *seen.rbegin() == 7;
}

Outcome golden_tables() {
    Outcome o;
    const auto checks = run_golden_checks();
    for (const GoldenCheck &c : checks) {
        o.detail << ' ' << c.name << '=' << c.entries_compared - c.mismatches.size() << '/' << c.entries_compared;
        if (!c.known_discrepancies.empty()) o.detail << " (" << c.known_discrepancies.size() << " flagged)";
        o.require(c.passed(), c.name);
    }
    o.require(checks[1].entries_compared == 144, "commutation entry count");
    o.require(checks[2].entries_compared == 8, "g1 view entry count");
    o.require(checks[3].entries_compared == 56, "remap entry count");
    o.require(!checks[3].known_discrepancies.empty(), "g1,g2,g3 row discrepancy flagged");
    const auto rows = remap_rows(ChannelKind::PhaseFlip);
    o.require(rows[7].directions == "g1,g2,g3" && rows[7].labels[0] == "Z7", "g1,g2,g3 row from XOR rule");
    return o;
}

Outcome sudoku() {
    Outcome o;
    for (ChannelKind kind : kAllChannelKinds) {
        const RemapTable t = remap_table(kind);
        std::set<std::array<int, kNumLabels>> distinct;
        for (std::size_t r = 0; r < kNumLabels; ++r) {
            std::array<int, kNumLabels> column{};
            for (std::size_t c = 0; c < kNumLabels; ++c) column[c] = t[c][r];
            o.require(is_permutation(t[r]), std::string(to_string(kind)) + " row");
            o.require(is_permutation(column), std::string(to_string(kind)) + " column");
            distinct.insert(t[r]);
        }
        o.require(distinct.size() == kNumLabels, std::string(to_string(kind)) + " distinct rows");
    }
    o.detail << " 3 kinds x 8 rows x 8 columns";
    return o;
}

Outcome sandwich_cases() {
    Outcome o;
    const dense::PropositionSummary s = dense::check_proposition_all();
    o.detail << " overlap=" << s.max_flipped_overlap << " identity_rel_residual=" << s.identity_pair.relative_residual
             << " case3=" << s.case3_proportional << '/' << s.case_counts[2]
             << " beta_alpha_gap=" << s.case3_max_beta_alpha_gap << " case2_zero=" << s.case2_zero << '/'
             << s.case_counts[1] << " seconds=" << s.seconds;
    o.require(s.max_flipped_overlap < 1e-12, "flipped overlap");
    o.require(s.identity_pair.case_id == 1 && !s.identity_pair.proportional_to_p &&
                  s.identity_pair.relative_residual >= 1.0,
              "identity pair");
    o.require(s.case_counts[2] > 0 && s.case3_proportional == s.case_counts[2], "case 3 proportional");
    o.require(s.case3_max_beta_alpha_gap <= 1e-10, "case 3 beta = alpha");
    o.require(s.case_counts[1] > 0 && s.case2_reports.size() == s.case_counts[1], "case 2 report");
    o.require(s.seconds < 10.0, "runtime");
    return o;
}

Outcome circuit_identities() {
    Outcome o;
    const dense::ConjugationReport conj = dense::verify_mask_conjugation();
    o.detail << " instance_diff=" << conj.instance_max_diff << " matched=" << conj.matched_equal
             << "/8 mismatched=" << conj.mismatched_unequal << "/56";
    o.require(conj.instance_max_diff <= 1e-12, "conjugation instance");
    o.require(conj.matched_equal == 8 && conj.mismatched_unequal == 56, "conjugation pairs");
    int found = 0;
    for (const dense::CheckResult &c : dense::verify_circuits()) {
        if (c.name == "unmodified_z6_outcomes" || c.name == "g1_flipped_z6_outcomes") {
            ++found;
            o.detail << ' ' << c.name << '=' << c.detail;
            o.require(c.passed, c.name);
        }
    }
    o.require(found == 2, "measurement checks present");
    return o;
}

Outcome frame_dense() {
    Outcome o;
    for (ChannelKind kind : kAllChannelKinds) {
        const dense::FrameDenseReport r = dense::frame_dense_agreement(kind);
        o.detail << ' ' << to_string(kind) << '=' << r.agreements << '/' << r.cases;
        o.require(r.cases == 64 && r.agreements == r.cases, std::string(to_string(kind)));
    }
    return o;
}

Outcome budget_law() {
    Outcome o;
    constexpr std::uint64_t n = 100000;
    const ProtocolConfig c = compliant(0.1, 0.02, n, 2026, false);
    const TrialStats s = run_protocol(c);
    const double expected = 0.1 + c.p_g * (1.0 - 8.0 * 0.1);
    const double sigma = std::sqrt(expected * (1.0 - expected) / n);
    double lo = 1.0;
    double hi = 0.0;
    bool strict_band = true;
    for (auto count : s.per_qubit_error_counts) {
        const double f = static_cast<double>(count) / n;
        lo = std::min(lo, f);
        hi = std::max(hi, f);
        strict_band = strict_band && f >= 0.1 && f <= 0.12;
        o.require(f >= 0.1 - 4.0 * sigma && f <= 0.12 + 4.0 * sigma, "band");
        o.require(std::abs(f - expected) <= 4.0 * sigma, "4 sigma of p + p_g(1-8p)");
    }
    o.detail << " freq=[" << lo << ", " << hi << "] expected=" << expected << " sigma=" << sigma
             << " strict_band=" << (strict_band ? "yes" : "no") << " success=" << s.decode_success_count << '/'
             << s.total_blocks;
    o.require(s.decode_success_count == s.total_blocks, "decode success 1.0");
    return o;
}

struct AttackRun {
    ProtocolConfig config;
    TrialStats stats;
};

Outcome attack_detection(const AttackRun &primary) {
    Outcome o;
    const double p = 0.05;
    const StrategyClass strategy = strategy_class(ChannelKind::PhaseFlip);
    double worst_identity = 0.0;
    double worst_dominant = 0.0;
    for (std::size_t t = 0; t < primary.config.key.size(); ++t) {
        const int digit = primary.config.key.digits[t];
        if (digit == 0) continue;
        const double n = static_cast<double>(primary.stats.block_counts_per_key_position[t]);
        const int row = *row_of_mask(ChannelKind::PhaseFlip, strategy.entries[digit]);
        const auto &labels = primary.stats.label_counts_per_key_position[t];
        const double zi = (labels[0] / n - p) / std::sqrt(p * (1.0 - p) / n);
        const double q = 1.0 - 7.0 * p;
        const double zd = (labels[row] / n - q) / std::sqrt(q * (1.0 - q) / n);
        worst_identity = std::max(worst_identity, std::abs(zi));
        worst_dominant = std::max(worst_dominant, std::abs(zd));
    }
    o.require(worst_identity <= 4.0, "identity frequency within 4 sigma of p");
    o.require(worst_dominant <= 4.0, "dominant error within 4 sigma of 1-7p");

    const ChannelParams params = primary.config.channel;
    constexpr int kRepetitions = 1000;
    constexpr int kCleanRepetitions = 5000;
    int detected = 0;
    for (int r = 0; r < kRepetitions; ++r) {
        const ProtocolConfig c = compliant(0.05, 0.06, 10000, 100000 + r, true);
        detected += bob_eavesdrop_detect(run_protocol(c), params).verdict == Verdict::EavesdropperDetected;
    }
    int false_positives = 0;
    for (int r = 0; r < kCleanRepetitions; ++r) {
        const ProtocolConfig c = compliant(0.05, 0.06, 10000, 200000 + r, false);
        false_positives += bob_eavesdrop_detect(run_protocol(c), params).verdict == Verdict::EavesdropperDetected;
    }
    const double alpha = DetectionOptions{}.alpha;
    const double fp_rate = static_cast<double>(false_positives) / kCleanRepetitions;
    o.detail << " max|z| identity=" << worst_identity << " dominant=" << worst_dominant << " detected=" << detected
             << '/' << kRepetitions << " clean_fp=" << false_positives << '/' << kCleanRepetitions
             << " bound=" << 2.0 * 10 * alpha;
    o.require(detected >= 999, "detection rate");
    o.require(fp_rate <= 2.0 * 10 * alpha, "false-positive rate");
    return o;
}

Outcome steganalysis_blindness() {
    Outcome o;
    constexpr int kRuns = 100;
    constexpr std::uint64_t n = 100000;
    const ChannelParams eve_params{ChannelKind::PhaseFlip, 0.1, 0.02, 0.0};
    int compliant_flags = 0;
    int reference_flags = 0;
    int naive_flags = 0;
    for (int r = 0; r < kRuns; ++r) {
        const TrialStats s = run_protocol(compliant(0.1, 0.02, n, 300000 + r, false));
        compliant_flags += eve_steganalysis(s.per_qubit_error_counts, eve_params, n).suspicious;

        // Honest channel sitting at the top of Eve's tolerance band.
        ProtocolConfig ref;
        ref.channel = {ChannelKind::PhaseFlip, 0.12, 0.0, 0.0};
        ref.p_g = 0.0;
        ref.key = build_key_sequence(0.0, 10);
        ref.blocks = n;
        ref.seed = 400000 + r;
        const TrialStats rs = run_protocol(ref);
        reference_flags += eve_steganalysis(rs.per_qubit_error_counts, eve_params, n).suspicious;

        ProtocolConfig naive;
        naive.channel = {ChannelKind::PhaseFlip, 0.01, 0.001, 0.0};
        naive.p_g = compute_pg_bound(0.01, 0.001);
        naive.key = KeySequence::parse("1");
        naive.blocks = n;
        naive.seed = 500000 + r;
        const TrialStats ns = run_protocol(naive);
        naive_flags += eve_steganalysis(ns.per_qubit_error_counts, naive.channel, n).suspicious;
    }
    const double z = stats::two_proportion_z(compliant_flags, kRuns, reference_flags, kRuns);
    const double critical = stats::normal_upper_quantile(0.005);
    o.detail << " compliant=" << compliant_flags << '/' << kRuns << " reference=" << reference_flags << '/' << kRuns
             << " z=" << z << " naive=" << naive_flags << '/' << kRuns;
    o.require(std::abs(z) < critical, "two-proportion test");
    o.require(naive_flags == kRuns, "naive run flagged");
    return o;
}

Outcome rates_and_curves(const AttackRun &primary) {
    using namespace metrics;
    Outcome o;
    const double rate = embedding_rate(SchemeId::Mgpd, 0.1, 0.02);
    o.require(std::abs(rate - 0.1) <= std::nextafter(0.1, 1.0) - 0.1, "rate at p=0.1 is 0.1 to the last ulp");
    o.require(embedding_rate(SchemeId::Mgpd, 0.12, 0.02) == 1.0 / 7.0, "rate 1/7 at p=0.12");
    for (double p = 0.15; p <= 0.5; p += 0.01) {
        o.require(embedding_rate(SchemeId::Mgpd, p, 0.02) == 0.0, "rate 0 above 1/7");
    }
    const double mgpd_bits = key_consumption(SchemeId::Mgpd, 100, 0.1, 0.02).bits;
    double refs_previous = -1.0;
    for (double n : default_grid(FigureId::Fig5)) {
        o.require(key_consumption(SchemeId::Mgpd, n, 0.1, 0.02).bits == mgpd_bits, "MGPD constant in N");
        const double refs = key_consumption(SchemeId::RefsErrorEmbed, n, 0.1, 0.02).bits;
        o.require(refs >= refs_previous, "REFS non-decreasing");
        refs_previous = refs;
        o.require(std::abs(key_consumption(SchemeId::Watermark, n, 0.1, 0.02).bits - n / 7.0) <= 1e-9 * n,
                  "WATERMARK N/7");
    }
    o.require(refs_previous > key_consumption(SchemeId::RefsErrorEmbed, 1000, 0.1, 0.02).bits, "REFS grows");

    const double closed = *kl_divergence_closed(SchemeId::Mgpd, 0.1);
    const double reference = 0.1 * std::log2(1.0 / 3.0) + 0.3 * std::log2(3.0);
    o.require(std::abs(closed - reference) <= 1e-12, "closed-form KL at p=0.1");

    // Plug-in estimate from the attacked run: D(observed labels || clean labels)
    // per modified position, averaged.
    const double p = primary.config.channel.p;
    std::vector<double> clean(kNumLabels, p);
    clean[0] = 1.0 - 7.0 * p;
    double sum = 0.0;
    double variance = 0.0;
    int positions = 0;
    for (std::size_t t = 0; t < primary.config.key.size(); ++t) {
        if (primary.config.key.digits[t] == 0) continue;
        const double n = static_cast<double>(primary.stats.block_counts_per_key_position[t]);
        std::vector<double> observed(kNumLabels);
        for (std::size_t j = 0; j < kNumLabels; ++j) {
            observed[j] = primary.stats.label_counts_per_key_position[t][j] / n;
        }
        const double d = *kl_divergence_empirical(observed, clean);
        double second = 0.0;
        for (std::size_t j = 0; j < kNumLabels; ++j) {
            if (observed[j] > 0.0) second += observed[j] * std::pow(std::log2(observed[j] / clean[j]), 2);
        }
        variance += (second - d * d) / n;
        sum += d;
        ++positions;
    }
    const double estimate = sum / positions;
    const double sigma = std::sqrt(variance) / positions;
    const double target = *kl_divergence_closed(SchemeId::Mgpd, p);
    o.require(std::abs(estimate - target) <= 4.0 * sigma, "plug-in KL within 4 sigma");

    const double kl_mgpd = *kl_divergence_closed(SchemeId::Mgpd, 0.05);
    const double kl_bb84 = *kl_divergence_closed(SchemeId::Bb84, 0.05);
    const double kl_qsdc = *kl_divergence_closed(SchemeId::QsdcTwoStep, 0.05);
    o.require(kl_mgpd > kl_bb84 && kl_mgpd > kl_qsdc, "KL ordering at p=0.05");
    char buffer[256];
    std::snprintf(buffer, sizeof buffer,
                  " rate=%.17g mgpd_bits=%g refs(1e6)=%.4f kl(0.1)=%.15f plugin=%.5f+-%.5f target=%.5f"
                  " kl(0.05): mgpd=%.4f bb84=%.4f qsdc=%.4f",
                  rate, mgpd_bits, refs_previous, closed, estimate, sigma, target, kl_mgpd, kl_bb84, kl_qsdc);
    o.detail << buffer;
    return o;
}

Outcome dense_fidelity() {
    Outcome o;
    std::mt19937_64 rng(10);
    std::normal_distribution<double> normal;
    const auto errors = dense::correctable_set();
    std::uniform_int_distribution<std::size_t> pick(0, errors.size() - 1);
    double worst = 1.0;
    double eve_best = 0.0;
    for (int s = 0; s < 100; ++s) {
        dense::Complex a(normal(rng), normal(rng));
        dense::Complex b(normal(rng), normal(rng));
        const double norm = std::sqrt(std::norm(a) + std::norm(b));
        a /= norm;
        b /= norm;
        for (std::uint8_t m = 0; m < 64; ++m) {
            const SignMask mask(m);
            worst = std::min(worst, dense::encode_decode_fidelity(a, b, mask, errors[pick(rng)], mask));
        }
        eve_best = std::max(eve_best, dense::encode_decode_fidelity(a, b, SignMask::of({1}),
                                                                     PauliOperator::parse("Z6", kBlockQubits),
                                                                     SignMask{}));
    }
    o.detail << " min matched fidelity=" << worst << " max Eve-frame fidelity=" << eve_best;
    o.require(worst >= 1.0 - 1e-10, "matched frame");
    o.require(eve_best < 1.0 - 1e-3, "Eve frame");
    return o;
}

}  // namespace

int main() {
    AttackRun primary{compliant(0.05, 0.06, 100000, 7, true), {}};
    primary.stats = run_protocol(primary.config);

    struct Criterion {
        int id;
        const char *name;
        Outcome (*run)(const AttackRun &);
    };
    const Criterion criteria[] = {
        {1, "golden tables", [](const AttackRun &) { return golden_tables(); }},
        {2, "remap tables are Latin squares", [](const AttackRun &) { return sudoku(); }},
        {3, "flipped-projector sandwiches", [](const AttackRun &) { return sandwich_cases(); }},
        {4, "circuit identities", [](const AttackRun &) { return circuit_identities(); }},
        {5, "frame/dense agreement", [](const AttackRun &) { return frame_dense(); }},
        {6, "budget law", [](const AttackRun &) { return budget_law(); }},
        {7, "attack detection", attack_detection},
        {8, "steganalysis blindness", [](const AttackRun &) { return steganalysis_blindness(); }},
        {9, "rates and curves", rates_and_curves},
        {10, "dense fidelity", [](const AttackRun &) { return dense_fidelity(); }},
    };
    int failures = 0;
    for (const Criterion &c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        const Outcome o = c.run(primary);
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %d (%s): %s%s (%.1fs)\n", c.id, c.name, o.passed ? "PASS" : "FAIL",
                    o.detail.str().c_str(), seconds);
        std::fflush(stdout);
        failures += !o.passed;
    }
    return failures == 0 ? 0 : 1;
}
