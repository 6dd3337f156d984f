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

#include "mgpd/protocol.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "mgpd/adversary.hpp"

namespace mgpd {

namespace {

constexpr double kProbabilityTolerance = 1e-12;

}  // namespace

double compute_pg_bound(double p, double delta, double eta) {
    const double denom = std::abs(1.0 - 8.0 * p);
    if (denom < eta) return kMaxErrorProbability;
    return std::min(delta / denom, kMaxErrorProbability);
}

StrategyClass strategy_class(ChannelKind kind) {
    StrategyClass strategy{kind, {}};
    for (std::size_t d = 0; d < kNumLabels; ++d) {
        strategy.entries[d] = mask_for_row(kind, kStrategyRowOrder[d]);
    }
    return strategy;
}

std::size_t KeySequence::nonzero_count() const {
    return static_cast<std::size_t>(std::count_if(digits.begin(), digits.end(), [](auto d) { return d != 0; }));
}

std::array<std::size_t, kNumLabels> KeySequence::digit_counts() const {
    std::array<std::size_t, kNumLabels> counts{};
    for (auto d : digits) {
        if (d >= kNumLabels) throw std::invalid_argument("key digit out of range 0..7");
        ++counts[d];
    }
    return counts;
}

bool KeySequence::balanced() const {
    const auto counts = digit_counts();
    const auto [lo, hi] = std::minmax_element(counts.begin() + 1, counts.end());
    return *hi - *lo <= 1;
}

KeySequence KeySequence::parse(std::string_view text) {
    KeySequence key;
    for (char c : text) {
        if (c == ',' || c == ' ' || c == '(' || c == ')') continue;
        if (c < '0' || c > '7') {
            throw std::invalid_argument("key digits must be 0..7, got '" + std::string(1, c) + "'");
        }
        key.digits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    if (key.digits.empty()) throw std::invalid_argument("key sequence is empty");
    return key;
}

std::string KeySequence::str() const {
    std::string out;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i) out += ',';
        out += static_cast<char>('0' + digits[i]);
    }
    return out;
}

KeySequence build_key_sequence(double p_g, std::size_t length) {
    if (!std::isfinite(p_g) || p_g < 0.0 || p_g > kMaxErrorProbability + kProbabilityTolerance) {
        throw std::invalid_argument("build_key_sequence: p_g must lie in [0, 1/7], got " + std::to_string(p_g));
    }
    if (length == 0) throw std::invalid_argument("build_key_sequence: length must be positive");

    const auto nonzero = std::min<std::size_t>(
        static_cast<std::size_t>(std::llround(7.0 * p_g * static_cast<double>(length))), length);
    std::array<std::size_t, kNumLabels> remaining{};
    for (std::size_t d = 1; d < kNumLabels; ++d) {
        remaining[d] = nonzero / 7 + (d <= nonzero % 7 ? 1 : 0);
    }

    const std::size_t zeros = length - nonzero;
    std::vector<bool> is_zero(length, false);
    for (std::size_t j = 0; j < zeros; ++j) is_zero[j * length / zeros] = true;

    KeySequence key;
    key.digits.assign(length, 0);
    std::size_t next = 1;
    for (std::size_t i = 0; i < length; ++i) {
        if (is_zero[i]) continue;
        while (remaining[next] == 0) next = next % 7 + 1;
        key.digits[i] = static_cast<std::uint8_t>(next);
        --remaining[next];
        next = next % 7 + 1;
    }
    return key;
}

void ProtocolConfig::check_runnable() const {
    channel.validate();
    if (key.digits.empty()) throw std::invalid_argument("key sequence is empty");
    key.digit_counts();
    if (blocks == 0) throw std::invalid_argument("blocks must be positive");
    if (workers == 0) throw std::invalid_argument("workers must be positive");
}

void ProtocolConfig::validate() const {
    check_runnable();
    const double bound = compute_pg_bound(channel.p, channel.delta);
    if (p_g < 0.0 || p_g > bound + kProbabilityTolerance) {
        throw std::invalid_argument("p_g = " + std::to_string(p_g) + " exceeds the budget " +
                                    std::to_string(bound));
    }
    if (!key.balanced()) throw std::invalid_argument("key sequence is not balanced across digits 1..7");
    const double length = static_cast<double>(key.size());
    const double fraction = static_cast<double>(key.nonzero_count()) / length;
    if (std::abs(fraction - 7.0 * p_g) > 0.5 / length + kProbabilityTolerance) {
        throw std::invalid_argument("key nonzero fraction " + std::to_string(fraction) +
                                    " does not match 7*p_g = " + std::to_string(7.0 * p_g));
    }
}

BlockFrame encode_block(int key_digit, const StrategyClass &strategy, std::optional<std::uint64_t> secret_id) {
    if (key_digit < 0 || key_digit >= static_cast<int>(kNumLabels)) {
        throw std::invalid_argument("encode_block: key digit must be 0..7");
    }
    if (secret_id.has_value() != (key_digit != 0)) {
        throw std::invalid_argument(key_digit == 0 ? "encode_block: secret on a non-stego block"
                                                   : "encode_block: stego block without a secret");
    }
    BlockFrame frame;
    frame.key_digit = key_digit;
    frame.mask = strategy.entries[key_digit];
    frame.is_stego = key_digit != 0;
    frame.secret_id = secret_id;
    return frame;
}

DecodeResult bob_decode_block(BlockFrame &frame, ChannelKind kind) {
    DecodeResult result;
    result.bob_syndrome = syndrome_of(frame.true_error);
    result.inferred_error = lookup_error(result.bob_syndrome, kind);
    result.success = result.inferred_error && equivalent_modulo_stabilizer(*result.inferred_error, frame.true_error);
    frame.bob_syndrome = result.bob_syndrome;
    frame.decode_success = result.success;
    return result;
}

BlockTrace simulate_block(const ProtocolConfig &config, const StrategyClass &strategy, std::uint64_t index) {
    const int digit = config.key.digits[index % config.key.size()];
    BlockTrace trace;
    trace.frame = encode_block(digit, strategy, digit != 0 ? std::optional<std::uint64_t>(index) : std::nullopt);
    trace.frame.index = index;

    BlockStream stream(config.seed, index);
    if (config.attack) {
        const InterceptOutcome outcome = intercept_resend(trace.frame.mask, config.channel.kind, config.channel, stream);
        trace.channel1_error = outcome.channel1_error;
        trace.frame.true_error = outcome.total();
    } else {
        trace.channel1_error = sample_block_error(config.channel, stream);
        trace.frame.true_error = trace.channel1_error;
    }
    trace.eve_syndrome = eve_view(syndrome_of(trace.channel1_error), trace.frame.mask);
    trace.eve_label = lookup_label(trace.eve_syndrome, config.channel.kind);

    const DecodeResult decoded = bob_decode_block(trace.frame, config.channel.kind);
    trace.bob_label = lookup_label(decoded.bob_syndrome, config.channel.kind);
    return trace;
}

namespace {

void accumulate(TrialStats &stats, const BlockTrace &trace, std::size_t key_length) {
    const std::size_t t = trace.frame.index % key_length;
    ++stats.total_blocks;
    ++stats.block_counts_per_key_position[t];
    if (trace.eve_label) {
        ++stats.eve_inferred_error_counts[*trace.eve_label];
        if (*trace.eve_label > 0) ++stats.per_qubit_error_counts[*trace.eve_label - 1];
    } else {
        ++stats.unexpected_syndrome_count;
    }
    if (trace.bob_label) {
        ++stats.label_counts_per_key_position[t][*trace.bob_label];
        if (*trace.bob_label == 0) ++stats.identity_counts_per_key_position[t];
    } else {
        ++stats.bob_unexpected_count;
    }
    if (trace.frame.decode_success) ++stats.decode_success_count;
    if (trace.frame.is_stego) {
        ++stats.stego_block_count;
        if (trace.frame.decode_success) ++stats.delivered_secret_count;
    }
}

TrialStats run_range(const ProtocolConfig &config, const StrategyClass &strategy, std::uint64_t begin,
                     std::uint64_t end) {
    TrialStats stats(config.channel.kind, config.key.size());
    for (std::uint64_t i = begin; i < end; ++i) {
        accumulate(stats, simulate_block(config, strategy, i), config.key.size());
    }
    return stats;
}

}  // namespace

TrialStats run_protocol(const ProtocolConfig &config) {
    config.check_runnable();
    const StrategyClass strategy = strategy_class(config.channel.kind);
    const std::uint64_t workers = std::min<std::uint64_t>(config.workers, config.blocks);
    if (workers <= 1) return run_range(config, strategy, 0, config.blocks);

    std::vector<TrialStats> partial(workers);
    std::vector<std::thread> threads;
    for (std::uint64_t w = 0; w < workers; ++w) {
        const std::uint64_t begin = config.blocks * w / workers;
        const std::uint64_t end = config.blocks * (w + 1) / workers;
        threads.emplace_back([&, w, begin, end] { partial[w] = run_range(config, strategy, begin, end); });
    }
    for (auto &thread : threads) thread.join();
    TrialStats total(config.channel.kind, config.key.size());
    for (const auto &stats : partial) total.merge(stats);
    return total;
}

}  // namespace mgpd
