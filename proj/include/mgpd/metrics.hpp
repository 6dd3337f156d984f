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

// Closed-form rates, key consumption and KL divergences for the compared
// schemes, plus the curve data built from them. Logarithms are base 2.

#ifndef MGPD_METRICS_HPP
#define MGPD_METRICS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mgpd::metrics {

enum class SchemeId { Mgpd, RefsErrorEmbed, Watermark, Bb84, QsdcTwoStep };

std::string_view to_string(SchemeId scheme);
SchemeId parse_scheme(std::string_view text);

/// nullopt marks an undefined value (a log of zero with nonzero weight).
using MaybeValue = std::optional<double>;

/// h(q) = -(1-q) log(1-q) - q log q with 0 log 0 = 0.
double binary_entropy(double q);

/// MGPD: min(delta/|1-8p|, 1/7) for p <= 1/7, else 0.
/// REFS_ERROR_EMBED: (4/7) delta (1 - 4p/3). WATERMARK: 1/7.
double embedding_rate(SchemeId scheme, double p, double delta);

inline constexpr std::size_t kDefaultKeyLength = 10;

struct KeyConsumption {
    double bits = 0.0;
    /// Error-embedding schemes: number of marked positions k in C(N, k).
    std::uint64_t k = 0;
    /// k fell outside [0, N] and was clamped.
    bool clamped = false;
};

/// MGPD: 3 bits per key digit (8 strategies), independent of N.
/// REFS_ERROR_EMBED: log2 C(N, round(delta/7 (1 - 4p/3) N)) via log-gamma.
/// WATERMARK: N / 7.
KeyConsumption key_consumption(SchemeId scheme, double n, double p, double delta,
                               std::size_t key_length = kDefaultKeyLength);

/// MGPD: embedding_rate(MGPD). BB84: (1-eps)/2 (1 - h(p)). QSDC: (1 - 2 eps)(1 - h(p)).
double key_rate(SchemeId scheme, double p, double delta, double epsilon);

/// Error rate seen by the legitimate parties of BB84 under intercept-resend
/// with channel noise p: 1/4 + p - p^2.
double bb84_attack_error_rate(double p);

/// MGPD: p log(p/(1-7p)) + (1-7p) log((1-7p)/p).
/// BB84: p log(p/(1/4+p-p^2)) + (1-p) log((1-p)/(3/4+p^2-p)).
/// QSDC (second detection): (1-p) log(4(1-p)) + p log(4p/3).
MaybeValue kl_divergence_closed(SchemeId scheme, double p);

/// sum_x P(x) log(P(x)/Q(x)). nullopt when some Q(x) = 0 < P(x).
MaybeValue kl_divergence_empirical(std::span<const double> p, std::span<const double> q);

enum class FigureId { Fig5, Fig6, Fig7, Fig9 };

std::string_view to_string(FigureId figure);
FigureId parse_figure(std::string_view text);

struct CurveParams {
    double p = 0.1;       // fixed channel noise for fig5
    double delta = 0.02;  // fig5, fig7
    std::vector<double> deltas = {0.005, 0.01, 0.02, 0.03};  // fig6
    double epsilon = 0.05;  // fig7
    std::size_t key_length = kDefaultKeyLength;

    /// Canonical text used for the params hash.
    std::string canonical() const;
};

struct SeriesValue {
    std::string scheme;  // "MGPD", "MGPD[delta=0.02]", ...
    MaybeValue value;
};

struct CurvePoint {
    FigureId figure = FigureId::Fig6;
    double x = 0.0;
    std::vector<SeriesValue> series;
};

/// fig5: x = N (carrier qubits); fig6, fig7, fig9: x = p.
std::vector<double> default_grid(FigureId figure);

/// One point per grid value, sorted by x.
std::vector<CurvePoint> emit_curves(FigureId figure, std::vector<double> grid, const CurveParams &params);

/// Columns figure_id,x,scheme,value,params-hash; undefined values print as
/// "undefined".
void write_curves_csv(std::ostream &out, const std::vector<CurvePoint> &points, std::string_view params_hash);

}  // namespace mgpd::metrics

#endif  // MGPD_METRICS_HPP
