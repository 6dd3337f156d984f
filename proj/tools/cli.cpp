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

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "mgpd/adversary.hpp"
#include "mgpd/dense.hpp"
#include "mgpd/io.hpp"
#include "mgpd/metrics.hpp"
#include "mgpd/protocol.hpp"
#include "mgpd/tables.hpp"

namespace mgpd::cli {

namespace {

using io::Json;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

double parse_double(const std::string &text, const std::string &what) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used != text.size() || text.empty()) throw UsageError(what + ": not a number '" + text + "'");
    return v;
}

struct ChannelOptions {
    std::string kind = "phase-flip";
    double p = 0.0;
    double delta = 0.0;
    double slack = 0.0;

    void add_to(CLI::App *cmd, bool need_p) {
        cmd->add_option("--kind", kind, "bit-flip | phase-flip | bit-phase-flip")->capture_default_str();
        auto *opt = cmd->add_option("--p", p, "per-qubit error probability");
        if (need_p) opt->required();
        cmd->add_option("--delta", delta, "tolerated deviation above p")->capture_default_str();
        cmd->add_option("--slack", slack, "allowance on p + delta <= 1/7")->capture_default_str();
    }

    ChannelParams resolve() const {
        ChannelParams params{parse_channel_kind(kind), p, delta, slack};
        params.validate();
        return params;
    }
};

struct RunOptions {
    ChannelOptions channel;
    std::string pg = "auto";
    std::string key;
    std::size_t key_length = metrics::kDefaultKeyLength;
    std::uint64_t blocks = 100000;
    std::uint64_t seed = 0;
    bool attack = false;
    bool ignore_budget = false;
    unsigned workers = 1;

    void add_to(CLI::App *cmd) {
        channel.add_to(cmd, true);
        cmd->add_option("--pg", pg, "modification probability per direction, or auto")->capture_default_str();
        cmd->add_option("--key", key, "explicit key digits, e.g. 0,1,2,0,3,4,0,5,6,7");
        cmd->add_option("--key-length", key_length, "length L of the constructed key")->capture_default_str()
            ->check(CLI::PositiveNumber);
        cmd->add_option("--blocks", blocks, "number of 7-qubit blocks")->capture_default_str()->check(CLI::PositiveNumber);
        cmd->add_option("--seed", seed, "master seed")->required();
        cmd->add_flag("--attack", attack, "intercept-resend on the channel");
        cmd->add_flag("--ignore-budget", ignore_budget, "run keys that violate the p_g budget");
        cmd->add_option("--workers", workers, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
    }

    ProtocolConfig resolve() const {
        ProtocolConfig config;
        config.channel = channel.resolve();
        config.p_g = pg == "auto" ? compute_pg_bound(config.channel.p, config.channel.delta) : parse_double(pg, "--pg");
        config.key = key.empty() ? build_key_sequence(config.p_g, key_length) : KeySequence::parse(key);
        config.blocks = blocks;
        config.seed = seed;
        config.attack = attack;
        config.workers = workers;
        if (ignore_budget) {
            config.check_runnable();
        } else {
            config.validate();
        }
        return config;
    }
};

struct Output {
    std::string path;

    void add_to(CLI::App *cmd) { cmd->add_option("--out", path, "output file (default stdout)"); }

    void write(std::ostream &fallback, const std::function<void(std::ostream &)> &emit) const {
        if (path.empty()) {
            emit(fallback);
            return;
        }
        std::ofstream file(path, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open output file '" + path + "'");
        emit(file);
        if (!file) throw std::runtime_error("failed writing '" + path + "'");
    }

    void write_json(std::ostream &fallback, const Json &doc) const {
        write(fallback, [&](std::ostream &os) { os << doc.dump(2) << '\n'; });
    }
};

Json document(std::string_view command, const std::string &canonical_config) {
    return io::provenance(command, io::hash_hex(canonical_config));
}

Json eve_view_json(const TrialStats &stats, const ProtocolConfig &config) {
    Json j;
    Json freq = Json::array();
    for (auto c : stats.per_qubit_error_counts) {
        freq.push_back(static_cast<double>(c) / static_cast<double>(stats.total_blocks));
    }
    j["per_qubit_error_freq"] = std::move(freq);
    j["expected_per_qubit_error_freq"] =
        config.channel.p + config.p_g * (1.0 - 8.0 * config.channel.p);
    return j;
}

// ---- tables ---------------------------------------------------------------

int cmd_tables(const std::string &table, const std::string &kind_text, const std::string &mask_text,
               const std::string &report_path, const Output &output, std::ostream &out, std::ostream &err) {
    const ChannelKind kind = parse_channel_kind(kind_text);
    output.write(out, [&](std::ostream &os) {
        if (table == "remap") {
            os << "directions";
            for (std::size_t c = 0; c < kNumLabels; ++c) os << ',' << error_label_name(kind, static_cast<int>(c));
            os << '\n';
            for (const auto &row : remap_rows(kind)) {
                os << '"' << row.directions << '"';
                for (const auto &label : row.labels) os << ',' << label;
                os << '\n';
            }
        } else if (table == "commutation") {
            os << "error,g1,g2,g3,g4,g5,g6\n";
            for (const auto &row : commutation_table()) {
                os << row.error;
                for (int s : row.signs) os << ',' << (s > 0 ? '+' : '-');
                os << '\n';
            }
        } else {
            os << "real_error,eve_syndrome,eve_error\n";
            for (const auto &e : eve_perspective_table(kind, SignMask::parse(mask_text))) {
                os << e.real_error << ',' << e.eve_syndrome.str() << ',' << e.eve_error << '\n';
            }
        }
    });

    const auto checks = run_golden_checks();
    bool all_passed = true;
    Json report = document("tables", "golden");
    report["checks"] = Json::array();
    for (const auto &check : checks) {
        all_passed = all_passed && check.passed();
        err << "golden " << check.name << ": " << check.entries_compared << " compared, "
            << check.mismatches.size() << " mismatches, " << check.known_discrepancies.size()
            << " known discrepancies\n";
        for (const auto &m : check.known_discrepancies) {
            err << "  known discrepancy " << m.row << '/' << m.column << ": published " << m.published
                << ", generated " << m.generated << '\n';
        }
        for (const auto &m : check.mismatches) {
            err << "  MISMATCH " << m.row << '/' << m.column << ": published " << m.published << ", generated "
                << m.generated << '\n';
        }
        report["checks"].push_back(io::to_json(check));
    }
    report["passed"] = all_passed;
    if (!report_path.empty()) Output{report_path}.write_json(out, report);
    return all_passed ? kExitOk : kExitCheckFailed;
}

// ---- simulate / detect / steganalyze ----------------------------------------

int cmd_simulate(const RunOptions &options, const DetectionOptions &detection, double eve_alpha,
                 const Output &output, std::ostream &out) {
    const ProtocolConfig config = options.resolve();
    const TrialStats stats = run_protocol(config);
    stats.check_invariants();

    Json doc = document("simulate", io::canonical(config));
    doc["config"] = io::to_json(config);
    doc["stats"] = io::to_json(stats);
    doc["eve_view"] = eve_view_json(stats, config);
    doc["detection"] = io::to_json(bob_eavesdrop_detect(stats, config.channel, detection));
    doc["steganalysis"] = io::to_json(
        eve_steganalysis(stats.per_qubit_error_counts, config.channel, stats.total_blocks, eve_alpha));
    output.write_json(out, doc);
    return kExitOk;
}

int cmd_detect(const std::string &input, const DetectionOptions &detection, const Output &output,
               std::ostream &out) {
    std::ifstream file(input);
    if (!file) throw UsageError("cannot open input file '" + input + "'");
    Json in;
    try {
        in = Json::parse(file);
    } catch (const nlohmann::json::exception &e) {
        throw UsageError("input is not valid JSON: " + std::string(e.what()));
    }
    if (!in.contains("config") || !in.contains("stats")) throw UsageError("input lacks 'config' or 'stats'");
    const ChannelParams params = io::channel_params_from_json(in.at("config"));
    const TrialStats stats = io::trial_stats_from_json(in.at("stats"));
    const DetectionReport report = bob_eavesdrop_detect(stats, params, detection);

    std::ostringstream canon;
    canon << in.value("config_hash", std::string()) << ";alpha=" << detection.alpha
          << ";min_samples=" << detection.min_samples;
    Json doc = document("detect", canon.str());
    doc["input_config_hash"] = in.value("config_hash", std::string());
    doc["detection"] = io::to_json(report);
    output.write_json(out, doc);
    return kExitOk;
}

int cmd_steganalyze(const RunOptions &options, double eve_alpha, std::uint64_t runs, const Output &output,
                    std::ostream &out) {
    ProtocolConfig config = options.resolve();
    Json doc = document("steganalyze", io::canonical(config) + ";eve_alpha=" + std::to_string(eve_alpha) +
                                           ";runs=" + std::to_string(runs));
    doc["config"] = io::to_json(config);
    doc["eve_alpha"] = eve_alpha;
    Json verdicts = Json::array();
    std::uint64_t suspicious = 0;
    const std::uint64_t base_seed = config.seed;
    for (std::uint64_t r = 0; r < runs; ++r) {
        config.seed = base_seed + r;
        const TrialStats stats = run_protocol(config);
        const SteganalysisVerdict v =
            eve_steganalysis(stats.per_qubit_error_counts, config.channel, stats.total_blocks, eve_alpha);
        if (v.suspicious) ++suspicious;
        Json vj = io::to_json(v);
        vj["seed"] = config.seed;
        verdicts.push_back(std::move(vj));
    }
    doc["runs"] = runs;
    doc["suspicious_runs"] = suspicious;
    doc["verdicts"] = std::move(verdicts);
    output.write_json(out, doc);
    return kExitOk;
}

// ---- curves -------------------------------------------------------------------

std::vector<double> parse_grid(const std::string &text) {
    std::vector<double> grid;
    if (text.find(':') != std::string::npos) {
        std::vector<double> parts;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ':')) parts.push_back(parse_double(item, "--grid"));
        if (parts.size() != 3 || !(parts[2] > 0.0) || parts[1] < parts[0]) {
            throw UsageError("--grid: expected start:stop:step with step > 0");
        }
        const auto steps = static_cast<long>(std::floor((parts[1] - parts[0]) / parts[2] + 1e-9));
        for (long i = 0; i <= steps; ++i) grid.push_back(parts[0] + static_cast<double>(i) * parts[2]);
        return grid;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) grid.push_back(parse_double(item, "--grid"));
    if (grid.empty()) throw UsageError("--grid: empty grid");
    return grid;
}

int cmd_curves(const std::string &figure_text, metrics::CurveParams params, bool delta_given, double delta,
               const std::string &grid_text, const std::string &format, const Output &output, std::ostream &out) {
    const metrics::FigureId figure = metrics::parse_figure(figure_text);
    if (delta_given) {
        if (!(delta >= 0.0)) throw UsageError("--delta must be non-negative");
        params.delta = delta;
        params.deltas = {delta};
    }
    const std::vector<double> grid = grid_text.empty() ? metrics::default_grid(figure) : parse_grid(grid_text);
    const auto points = metrics::emit_curves(figure, grid, params);
    std::ostringstream grid_canon;
    for (double x : grid) grid_canon << x << ',';
    const std::string hash =
        io::hash_hex(std::string(metrics::to_string(figure)) + ";" + params.canonical() + ";grid=" + grid_canon.str());
    if (format == "json") {
        Json doc = io::provenance("curves", hash);
        doc["figure_id"] = metrics::to_string(figure);
        doc["params"] = params.canonical();
        doc["log_base"] = 2;
        doc["points"] = io::to_json(points);
        output.write_json(out, doc);
    } else {
        output.write(out, [&](std::ostream &os) {
            os << "# " << io::kToolName << ' ' << io::kToolVersion << " config_hash=" << hash << " log_base=2\n";
            metrics::write_curves_csv(os, points, hash);
        });
    }
    return kExitOk;
}

// ---- verify / fidelity ------------------------------------------------------------

int cmd_verify_proposition(const Output &output, std::ostream &out, std::ostream &err) {
    const dense::PropositionSummary s = dense::check_proposition_all();
    const bool passed = s.max_flipped_overlap < 1e-12 && !s.identity_pair.proportional_to_p &&
                        s.identity_pair.relative_residual >= 1.0 && s.case3_proportional == s.case_counts[2] &&
                        s.case3_max_beta_alpha_gap < 1e-10 && !s.common_beta_exists;
    Json doc = document("verify proposition", "proposition");
    doc["passed"] = passed;
    doc["max_flipped_overlap"] = s.max_flipped_overlap;
    doc["identity_pair"] = io::to_json(s.identity_pair);
    doc["case_counts"] = {{"case1", s.case_counts[0]}, {"case2", s.case_counts[1]}, {"case3", s.case_counts[2]}};
    doc["case3_proportional"] = s.case3_proportional;
    doc["case3_max_beta_alpha_gap"] = s.case3_max_beta_alpha_gap;
    doc["case2_zero_operator"] = s.case2_zero;
    doc["case2_alternative_form"] = s.case2_alternative;
    doc["common_beta_exists"] = s.common_beta_exists;
    Json case2 = Json::array();
    for (const auto &r : s.case2_reports) case2.push_back(io::to_json(r));
    doc["case2_pairs"] = std::move(case2);
    output.write_json(out, doc);
    err << "verify proposition: " << (passed ? "pass" : "FAIL") << '\n';
    return passed ? kExitOk : kExitCheckFailed;
}

int cmd_verify_circuits(const Output &output, std::ostream &out, std::ostream &err) {
    const auto checks = dense::verify_circuits();
    bool passed = true;
    Json list = Json::array();
    for (const auto &c : checks) {
        passed = passed && c.passed;
        list.push_back(io::to_json(c));
        if (!c.passed) err << "FAIL " << c.name << ": " << c.detail << '\n';
    }
    Json doc = document("verify circuits", "circuits");
    doc["passed"] = passed;
    doc["checks"] = std::move(list);
    output.write_json(out, doc);
    err << "verify circuits: " << (passed ? "pass" : "FAIL") << '\n';
    return passed ? kExitOk : kExitCheckFailed;
}

int cmd_fidelity(std::uint64_t seed, std::uint64_t states, const Output &output, std::ostream &out) {
    const auto errors = dense::correctable_set();
    double min_fidelity = 1.0;
    std::uint64_t cases = 0;
    for (unsigned m = 0; m < 64; ++m) {
        const SignMask mask(static_cast<std::uint8_t>(m));
        for (std::uint64_t s = 0; s < states; ++s) {
            BlockStream rng(seed, m * states + s, 0xF1DE);
            const double u = rng.uniform();
            const double phi_a = 2.0 * M_PI * rng.uniform();
            const double phi_b = 2.0 * M_PI * rng.uniform();
            const dense::Complex a = std::polar(std::sqrt(u), phi_a);
            const dense::Complex b = std::polar(std::sqrt(1.0 - u), phi_b);
            const auto &error = errors[rng() % errors.size()];
            min_fidelity = std::min(min_fidelity, dense::encode_decode_fidelity(a, b, mask, error, mask));
            ++cases;
        }
    }
    const double eve_frame = dense::encode_decode_fidelity(std::sqrt(0.5), std::sqrt(0.5), SignMask::of({1}),
                                                           single_error(PauliKind::Z, 6, kBlockQubits), SignMask{});
    const bool passed = min_fidelity >= 1.0 - 1e-10 && eve_frame < 1.0 - 1e-3;
    Json doc = document("fidelity", "seed=" + std::to_string(seed) + ";states=" + std::to_string(states));
    doc["passed"] = passed;
    doc["cases"] = cases;
    doc["min_matched_fidelity"] = min_fidelity;
    doc["eve_frame_fidelity"] = eve_frame;
    output.write_json(out, doc);
    return passed ? kExitOk : kExitCheckFailed;
}

}  // namespace

std::vector<std::string> expand_config(const std::vector<std::string> &args) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < args.size(); ++i) {
        std::string path;
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) throw UsageError("--config requires a file");
            path = args[++i];
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
        } else {
            out.push_back(args[i]);
            continue;
        }
        std::ifstream file(path);
        if (!file) throw UsageError("cannot open config file '" + path + "'");
        Json j;
        try {
            j = Json::parse(file);
        } catch (const nlohmann::json::exception &e) {
            throw UsageError("config file is not valid JSON: " + std::string(e.what()));
        }
        if (!j.is_object()) throw UsageError("config file must hold a flat JSON object");
        for (const auto &[key, value] : j.items()) {
            const std::string flag = "--" + key;
            if (value.is_boolean()) {
                if (value.get<bool>()) out.push_back(flag);
            } else if (value.is_string()) {
                out.push_back(flag);
                out.push_back(value.get<std::string>());
            } else if (value.is_number()) {
                out.push_back(flag);
                out.push_back(value.dump());
            } else {
                throw UsageError("config key '" + key + "' must be a string, number or boolean");
            }
        }
    }
    return out;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Pauli-frame and dense simulator for modified-projection-direction steganography", "mgpd"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(io::kToolVersion));
    app.add_option("--config", "flat JSON file of option values");  // expanded before parsing

    Output tables_out, sim_out, detect_out, steg_out, curves_out, prop_out, circ_out, fid_out;

    auto *tables = app.add_subcommand("tables", "emit syndrome tables and run the golden checks");
    std::string table = "remap", tables_kind = "phase-flip", tables_mask = "g1", tables_report;
    tables->add_option("--table", table, "remap | commutation | eve-view")
        ->check(CLI::IsMember({"remap", "commutation", "eve-view"}))->capture_default_str();
    tables->add_option("--kind", tables_kind, "channel family")->capture_default_str();
    tables->add_option("--mask", tables_mask, "mask for eve-view, e.g. g1 or g1,g3")->capture_default_str();
    tables->add_option("--report", tables_report, "write the golden-check report as JSON");
    tables_out.add_to(tables);

    DetectionOptions detection;
    double eve_alpha = 0.01;
    auto *simulate = app.add_subcommand("simulate", "run the protocol and aggregate block statistics");
    RunOptions sim;
    sim.add_to(simulate);
    simulate->add_option("--alpha", detection.alpha, "detection significance")->capture_default_str();
    simulate->add_option("--min-samples", detection.min_samples, "minimum blocks per key position")
        ->capture_default_str();
    simulate->add_option("--eve-alpha", eve_alpha, "Eve's steganalysis significance")->capture_default_str();
    sim_out.add_to(simulate);

    auto *detect = app.add_subcommand("detect", "re-run eavesdropping detection on stored statistics");
    std::string detect_input;
    detect->add_option("--input", detect_input, "simulate output JSON")->required();
    detect->add_option("--alpha", detection.alpha, "detection significance")->capture_default_str();
    detect->add_option("--min-samples", detection.min_samples, "minimum blocks per key position")
        ->capture_default_str();
    detect_out.add_to(detect);

    auto *steg = app.add_subcommand("steganalyze", "Eve's per-qubit frequency test over seeded runs");
    RunOptions steg_run;
    std::uint64_t steg_runs = 1;
    steg_run.add_to(steg);
    steg->add_option("--eve-alpha", eve_alpha, "Eve's significance")->capture_default_str();
    steg->add_option("--runs", steg_runs, "runs with seeds seed, seed+1, ...")->capture_default_str()
        ->check(CLI::PositiveNumber);
    steg_out.add_to(steg);

    auto *curves = app.add_subcommand("curves", "closed-form comparison curves as CSV or JSON");
    std::string figure, grid, format = "csv";
    metrics::CurveParams curve_params;
    double curve_delta = 0.0;
    curves->add_option("--figure", figure, "fig5 | fig6 | fig7 | fig9")->required();
    curves->add_option("--p", curve_params.p, "channel noise for fig5")->capture_default_str();
    auto *delta_opt = curves->add_option("--delta", curve_delta, "delta (fig6: single series)");
    curves->add_option("--epsilon", curve_params.epsilon, "sifting loss for fig7")->capture_default_str();
    curves->add_option("--key-length", curve_params.key_length, "MGPD key length")->capture_default_str();
    curves->add_option("--grid", grid, "start:stop:step or comma list of x values");
    curves->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    curves_out.add_to(curves);

    auto *verify = app.add_subcommand("verify", "dense operator checks");
    verify->require_subcommand(1);
    auto *proposition = verify->add_subcommand("proposition", "projector sandwich case analysis");
    prop_out.add_to(proposition);
    auto *circuits = verify->add_subcommand("circuits", "measurement and conjugation identities");
    circ_out.add_to(circuits);

    auto *fidelity = app.add_subcommand("fidelity", "dense encode/decode fidelity sweep over all masks");
    std::uint64_t fid_seed = 0, fid_states = 100;
    fidelity->add_option("--seed", fid_seed, "master seed")->required();
    fidelity->add_option("--states", fid_states, "random logical states per mask")->capture_default_str()
        ->check(CLI::PositiveNumber);
    fid_out.add_to(fidelity);

    try {
        std::vector<std::string> reversed = expand_config(args);
        if (!reversed.empty() && !reversed.front().starts_with("-") && app.get_subcommand_no_throw(reversed.front()) == nullptr) {
            err << "error: unknown command '" << reversed.front() << "'\n";
            return kExitUsage;
        }
        std::reverse(reversed.begin(), reversed.end());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::CallForVersion &) {
        out << io::kToolVersion << '\n';
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*tables) return cmd_tables(table, tables_kind, tables_mask, tables_report, tables_out, out, err);
        if (*simulate) return cmd_simulate(sim, detection, eve_alpha, sim_out, out);
        if (*detect) return cmd_detect(detect_input, detection, detect_out, out);
        if (*steg) return cmd_steganalyze(steg_run, eve_alpha, steg_runs, steg_out, out);
        if (*curves) {
            return cmd_curves(figure, curve_params, delta_opt->count() > 0, curve_delta, grid, format, curves_out,
                              out);
        }
        if (*proposition) return cmd_verify_proposition(prop_out, out, err);
        if (*circuits) return cmd_verify_circuits(circ_out, out, err);
        if (*fidelity) return cmd_fidelity(fid_seed, fid_states, fid_out, out);
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    err << "error: no command\n";
    return kExitUsage;
}

}  // namespace mgpd::cli
