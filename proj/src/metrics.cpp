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

#include "mgpd/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "mgpd/channel.hpp"
#include "mgpd/protocol.hpp"

namespace mgpd::metrics {

namespace {

constexpr double kBitsPerKeyDigit = 3.0;

// a * log2(num / den) with the 0 log 0 = 0 convention.
MaybeValue weighted_log(double a, double num, double den) {
    if (a == 0.0) return 0.0;
    if (!(num > 0.0) || !(den > 0.0)) return std::nullopt;
    return a * std::log2(num / den);
}

MaybeValue sum(MaybeValue a, MaybeValue b) {
    if (!a || !b) return std::nullopt;
    return *a + *b;
}

void require_probability(double p, double hi, const char *what) {
    if (!std::isfinite(p) || p < 0.0 || p > hi) {
        throw std::invalid_argument(std::string(what) + ": probability out of range");
    }
}

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

}  // namespace

std::string_view to_string(SchemeId scheme) {
    switch (scheme) {
        case SchemeId::Mgpd: return "MGPD";
        case SchemeId::RefsErrorEmbed: return "REFS_ERROR_EMBED";
        case SchemeId::Watermark: return "WATERMARK";
        case SchemeId::Bb84: return "BB84";
        case SchemeId::QsdcTwoStep: return "QSDC_TWO_STEP";
    }
    return "?";
}

SchemeId parse_scheme(std::string_view text) {
    for (SchemeId s : {SchemeId::Mgpd, SchemeId::RefsErrorEmbed, SchemeId::Watermark, SchemeId::Bb84,
                       SchemeId::QsdcTwoStep}) {
        if (text == to_string(s)) return s;
    }
    if (text == "mgpd") return SchemeId::Mgpd;
    if (text == "refs") return SchemeId::RefsErrorEmbed;
    if (text == "watermark") return SchemeId::Watermark;
    if (text == "bb84") return SchemeId::Bb84;
    if (text == "qsdc") return SchemeId::QsdcTwoStep;
    throw std::invalid_argument("unknown scheme '" + std::string(text) + "'");
}

double binary_entropy(double q) {
    require_probability(q, 1.0, "binary_entropy");
    double h = 0.0;
    if (q > 0.0) h -= q * std::log2(q);
    if (q < 1.0) h -= (1.0 - q) * std::log2(1.0 - q);
    return h;
}

double embedding_rate(SchemeId scheme, double p, double delta) {
    if (!(p >= 0.0) || !(delta >= 0.0)) throw std::invalid_argument("embedding_rate: p and delta must be non-negative");
    switch (scheme) {
        case SchemeId::Mgpd: return p <= kMaxErrorProbability ? compute_pg_bound(p, delta) : 0.0;
        case SchemeId::RefsErrorEmbed: return 4.0 / 7.0 * delta * (1.0 - 4.0 / 3.0 * p);
        case SchemeId::Watermark: return 1.0 / 7.0;
        default: break;
    }
    throw std::invalid_argument("embedding_rate: not defined for " + std::string(to_string(scheme)));
}

KeyConsumption key_consumption(SchemeId scheme, double n, double p, double delta, std::size_t key_length) {
    if (!(n >= 1.0) || !std::isfinite(n)) throw std::invalid_argument("key_consumption: N must be >= 1");
    KeyConsumption out;
    switch (scheme) {
        case SchemeId::Mgpd:
            out.bits = kBitsPerKeyDigit * static_cast<double>(key_length);
            return out;
        case SchemeId::Watermark:
            out.bits = n / 7.0;
            return out;
        case SchemeId::RefsErrorEmbed: {
            const double total = std::floor(n);
            double k = std::round(delta / 7.0 * (1.0 - 4.0 / 3.0 * p) * total);
            if (k < 0.0 || k > total || !std::isfinite(k)) {
                out.clamped = true;
                k = std::clamp(std::isfinite(k) ? k : 0.0, 0.0, total);
            }
            out.k = static_cast<std::uint64_t>(k);
            out.bits = (std::lgamma(total + 1.0) - std::lgamma(k + 1.0) - std::lgamma(total - k + 1.0)) / std::log(2.0);
            if (out.bits < 0.0) out.bits = 0.0;
            return out;
        }
        default: break;
    }
    throw std::invalid_argument("key_consumption: not defined for " + std::string(to_string(scheme)));
}

double key_rate(SchemeId scheme, double p, double delta, double epsilon) {
    switch (scheme) {
        case SchemeId::Mgpd: return embedding_rate(SchemeId::Mgpd, p, delta);
        case SchemeId::Bb84:
            require_probability(p, 0.5, "key_rate");
            return (1.0 - epsilon) / 2.0 * (1.0 - binary_entropy(p));
        case SchemeId::QsdcTwoStep:
            require_probability(p, 0.5, "key_rate");
            return (1.0 - 2.0 * epsilon) * (1.0 - binary_entropy(p));
        default: break;
    }
    throw std::invalid_argument("key_rate: not defined for " + std::string(to_string(scheme)));
}

double bb84_attack_error_rate(double p) {
    require_probability(p, 0.5, "bb84_attack_error_rate");
    return 0.25 + p - p * p;
}

MaybeValue kl_divergence_closed(SchemeId scheme, double p) {
    require_probability(p, 1.0, "kl_divergence_closed");
    switch (scheme) {
        case SchemeId::Mgpd: {
            const double q = 1.0 - 7.0 * p;
            return sum(weighted_log(p, p, q), weighted_log(q, q, p));
        }
        case SchemeId::Bb84: {
            if (p > 0.5) return std::nullopt;
            const double e = bb84_attack_error_rate(p);
            return sum(weighted_log(p, p, e), weighted_log(1.0 - p, 1.0 - p, 1.0 - e));
        }
        case SchemeId::QsdcTwoStep:
            return sum(weighted_log(1.0 - p, 4.0 * (1.0 - p), 1.0), weighted_log(p, 4.0 * p, 3.0));
        default: break;
    }
    throw std::invalid_argument("kl_divergence_closed: not defined for " + std::string(to_string(scheme)));
}

MaybeValue kl_divergence_empirical(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size() || p.empty()) throw std::invalid_argument("kl_divergence_empirical: size mismatch");
    double sp = 0.0;
    double sq = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!(p[i] >= 0.0) || !(q[i] >= 0.0)) throw std::invalid_argument("kl_divergence_empirical: negative entry");
        sp += p[i];
        sq += q[i];
    }
    if (std::abs(sp - 1.0) > 1e-9 || std::abs(sq - 1.0) > 1e-9) {
        throw std::invalid_argument("kl_divergence_empirical: distributions must be normalized");
    }
    MaybeValue total = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) total = sum(total, weighted_log(p[i], p[i], q[i]));
    return total;
}

std::string_view to_string(FigureId figure) {
    switch (figure) {
        case FigureId::Fig5: return "fig5";
        case FigureId::Fig6: return "fig6";
        case FigureId::Fig7: return "fig7";
        case FigureId::Fig9: return "fig9";
    }
    return "?";
}

FigureId parse_figure(std::string_view text) {
    for (FigureId f : {FigureId::Fig5, FigureId::Fig6, FigureId::Fig7, FigureId::Fig9}) {
        if (text == to_string(f)) return f;
    }
    throw std::invalid_argument("unknown figure '" + std::string(text) + "' (expected fig5, fig6, fig7 or fig9)");
}

std::string CurveParams::canonical() const {
    std::string out = "p=" + format_number(p) + ";delta=" + format_number(delta) + ";deltas=";
    for (std::size_t i = 0; i < deltas.size(); ++i) out += (i ? "," : "") + format_number(deltas[i]);
    out += ";epsilon=" + format_number(epsilon) + ";key_length=" + std::to_string(key_length);
    return out;
}

std::vector<double> default_grid(FigureId figure) {
    std::vector<double> grid;
    if (figure == FigureId::Fig5) {
        for (int e = 2; e <= 6; ++e) {
            for (double m : {1.0, 2.0, 5.0}) {
                if (e == 6 && m > 1.0) break;
                grid.push_back(m * std::pow(10.0, e));
            }
        }
        return grid;
    }
    for (int i = 0; i <= 40; ++i) grid.push_back(i / 200.0);
    return grid;
}

std::vector<CurvePoint> emit_curves(FigureId figure, std::vector<double> grid, const CurveParams &params) {
    std::sort(grid.begin(), grid.end());
    std::vector<CurvePoint> points;
    for (double x : grid) {
        CurvePoint point{figure, x, {}};
        switch (figure) {
            case FigureId::Fig5:
                for (SchemeId s : {SchemeId::Mgpd, SchemeId::RefsErrorEmbed, SchemeId::Watermark}) {
                    point.series.push_back({std::string(to_string(s)),
                                            key_consumption(s, x, params.p, params.delta, params.key_length).bits});
                }
                break;
            case FigureId::Fig6:
                for (double d : params.deltas) {
                    const std::string tag = "[delta=" + format_number(d) + "]";
                    point.series.push_back({"MGPD" + tag, embedding_rate(SchemeId::Mgpd, x, d)});
                    point.series.push_back({"REFS_ERROR_EMBED" + tag, embedding_rate(SchemeId::RefsErrorEmbed, x, d)});
                }
                point.series.push_back({"WATERMARK", embedding_rate(SchemeId::Watermark, x, 0.0)});
                break;
            case FigureId::Fig7:
                for (SchemeId s : {SchemeId::Mgpd, SchemeId::Bb84, SchemeId::QsdcTwoStep}) {
                    point.series.push_back({std::string(to_string(s)), key_rate(s, x, params.delta, params.epsilon)});
                }
                break;
            case FigureId::Fig9:
                for (SchemeId s : {SchemeId::Mgpd, SchemeId::Bb84, SchemeId::QsdcTwoStep}) {
                    point.series.push_back({std::string(to_string(s)), kl_divergence_closed(s, x)});
                }
                break;
        }
        points.push_back(std::move(point));
    }
    return points;
}

void write_curves_csv(std::ostream &out, const std::vector<CurvePoint> &points, std::string_view params_hash) {
    out << "figure_id,x,scheme,value,params-hash\n";
    char buf[40];
    for (const auto &point : points) {
        for (const auto &s : point.series) {
            out << to_string(point.figure) << ',' << format_number(point.x) << ',' << s.scheme << ',';
            if (s.value) {
                std::snprintf(buf, sizeof buf, "%.17g", *s.value);
                out << buf;
            } else {
                out << "undefined";
            }
            out << ',' << params_hash << '\n';
        }
    }
}

}  // namespace mgpd::metrics
