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

#include "mgpd/statistics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/normal.hpp>

namespace mgpd::stats {

double normal_upper_quantile(double tail) {
    if (!(tail > 0.0 && tail < 1.0)) throw std::invalid_argument("normal_upper_quantile: tail must be in (0,1)");
    return boost::math::quantile(boost::math::complement(boost::math::normal(), tail));
}

double binomial_z(std::uint64_t count, std::uint64_t n, double expected) {
    if (n == 0) throw std::invalid_argument("binomial_z: no samples");
    const double observed = static_cast<double>(count) / static_cast<double>(n);
    const double variance = expected * (1.0 - expected) / static_cast<double>(n);
    const double diff = observed - expected;
    if (variance <= 0.0) {
        if (diff == 0.0) return 0.0;
        return diff > 0 ? std::numeric_limits<double>::infinity() : -std::numeric_limits<double>::infinity();
    }
    return diff / std::sqrt(variance);
}

double two_proportion_z(std::uint64_t successes_a, std::uint64_t n_a, std::uint64_t successes_b,
                        std::uint64_t n_b) {
    if (n_a == 0 || n_b == 0) throw std::invalid_argument("two_proportion_z: empty sample");
    const double pa = static_cast<double>(successes_a) / static_cast<double>(n_a);
    const double pb = static_cast<double>(successes_b) / static_cast<double>(n_b);
    const double pooled = static_cast<double>(successes_a + successes_b) / static_cast<double>(n_a + n_b);
    const double variance = pooled * (1.0 - pooled) * (1.0 / static_cast<double>(n_a) + 1.0 / static_cast<double>(n_b));
    if (variance <= 0.0) return 0.0;
    return (pa - pb) / std::sqrt(variance);
}

double chi_square_critical(double degrees_of_freedom, double alpha) {
    return boost::math::quantile(boost::math::complement(boost::math::chi_squared(degrees_of_freedom), alpha));
}

}  // namespace mgpd::stats
