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

#ifndef MGPD_STATISTICS_HPP
#define MGPD_STATISTICS_HPP

#include <cstdint>

namespace mgpd::stats {

/// z such that P(Z > z) = tail for a standard normal Z.
double normal_upper_quantile(double tail);

/// Binomial z-score of `count` successes in `n` trials against probability
/// `expected`. A degenerate null (expected 0 or 1) yields 0 when the
/// observation matches it exactly and +/-infinity otherwise.
double binomial_z(std::uint64_t count, std::uint64_t n, double expected);

/// Pooled two-proportion z statistic; 0 when both samples are all-failure or
/// all-success.
double two_proportion_z(std::uint64_t successes_a, std::uint64_t n_a, std::uint64_t successes_b,
                        std::uint64_t n_b);

/// Upper critical value of the chi-square distribution.
double chi_square_critical(double degrees_of_freedom, double alpha);

}  // namespace mgpd::stats

#endif  // MGPD_STATISTICS_HPP
