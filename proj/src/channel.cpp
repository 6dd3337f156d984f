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

#include "mgpd/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mgpd {

void ChannelParams::validate() const {
    if (!std::isfinite(p) || p < 0.0 || p > kMaxErrorProbability) {
        throw std::invalid_argument("p must lie in [0, 1/7], got " + std::to_string(p));
    }
    if (!std::isfinite(delta) || delta < 0.0) {
        throw std::invalid_argument("delta must be non-negative, got " + std::to_string(delta));
    }
    if (!std::isfinite(slack) || slack < 0.0) {
        throw std::invalid_argument("slack must be non-negative");
    }
    if (p + delta > kMaxErrorProbability + slack) {
        throw std::invalid_argument("p + delta = " + std::to_string(p + delta) +
                                    " exceeds 1/7 + slack");
    }
}

int sample_block_label(const ChannelParams &params, BlockStream &stream) {
    const double u = stream.uniform();
    if (u >= 7.0 * params.p) return 0;
    const int k = static_cast<int>(u / params.p) + 1;
    return k > 7 ? 7 : k;
}

PauliOperator sample_block_error(const ChannelParams &params, BlockStream &stream) {
    return error_label(params.kind, sample_block_label(params, stream));
}

ChannelParams shifted_params(const ChannelParams &params) {
    params.validate();
    ChannelParams shifted = params;
    shifted.p = params.p + params.delta;
    shifted.delta = 0.0;
    shifted.validate();
    return shifted;
}

}  // namespace mgpd
