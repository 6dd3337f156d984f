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

#ifndef MGPD_CHANNEL_HPP
#define MGPD_CHANNEL_HPP

#include "mgpd/pauli.hpp"
#include "mgpd/rng.hpp"
#include "mgpd/steane.hpp"

namespace mgpd {

inline constexpr double kMaxErrorProbability = 1.0 / 7.0;

/// Single-type Pauli channel under the block single-error model: a 7-qubit
/// block suffers no error with probability 1 - 7p, otherwise exactly one
/// error of the channel's kind on a uniformly chosen qubit.
struct ChannelParams {
    ChannelKind kind = ChannelKind::PhaseFlip;
    double p = 0.0;      // per-qubit error probability
    double delta = 0.0;  // deviation from p still regarded as normal
    double slack = 0.0;  // allowance on p + delta <= 1/7

    /// Throws std::invalid_argument unless 0 <= p <= 1/7, delta >= 0 and
    /// p + delta <= 1/7 + slack.
    void validate() const;
};

/// Consumes exactly one draw from `stream`.
PauliOperator sample_block_error(const ChannelParams &params, BlockStream &stream);

/// Label index form of sample_block_error(): 0 for I, k for E_k.
int sample_block_label(const ChannelParams &params, BlockStream &stream);

/// The boundary channel Eve still regards as normal: p replaced by p + delta.
/// The result carries delta = 0; it has no tolerance left.
ChannelParams shifted_params(const ChannelParams &params);

}  // namespace mgpd

#endif  // MGPD_CHANNEL_HPP
