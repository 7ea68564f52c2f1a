// SPDX-License-Identifier: Apache-2.0
//
// nearfield-mimo: near-field LOS MIMO channel, EDoF and capacity toolkit
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "nearfield/cli.hpp"
#include "nearfield/channel.hpp"
#include "nearfield/errors.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <regex>

namespace nearfield::cli
{

namespace
{

template <typename E>
E lookup(const std::map<std::string, E> &table, const std::string &value, const char *flag)
{
    const auto it = table.find(value);
    if (it == table.end())
    {
        std::string choices;
        for (const auto &[k, _] : table)
            choices += (choices.empty() ? "" : "|") + k;
        throw UsageError(std::string(flag) + ": expected one of {" + choices + "}, got '" + value + "'");
    }
    return it->second;
}

template <typename E>
std::string reverse_lookup(const std::map<std::string, E> &table, E value)
{
    for (const auto &[k, v] : table)
        if (v == value)
            return k;
    return "?";
}

const std::map<std::string, SweepVariable> kSweeps{{"distance", SweepVariable::distance},
                                                   {"tx", SweepVariable::tx_elements},
                                                   {"rx", SweepVariable::rx_elements},
                                                   {"grid", SweepVariable::distance_x_tx_grid}};
const std::map<std::string, DistanceMode> kDistanceModes{{"exact", DistanceMode::exact},
                                                         {"fresnel", DistanceMode::fresnel}};
const std::map<std::string, IndexingMode> kIndexing{{"literal", IndexingMode::literal},
                                                    {"centered", IndexingMode::centered}};
const std::map<std::string, RankMode> kRanks{{"auto", RankMode::automatic}, {"min-mn", RankMode::min_mn}};
const std::map<std::string, OutputFormat> kFormats{{"csv", OutputFormat::csv}, {"json", OutputFormat::json}};
const std::map<std::string, Exec> kExec{{"parallel", Exec::parallel}, {"serial", Exec::serial}};

std::pair<std::size_t, std::size_t> parse_shape(const std::string &text, const char *flag)
{
    static const std::regex pattern(R"(^([0-9]{1,6})[xX]([0-9]{1,6})$)");
    std::smatch match;
    if (!std::regex_match(text, match, pattern))
        throw UsageError(std::string(flag) + ": expected HxV (e.g. 64x2), got '" + text + "'");
    const auto h = std::stoul(match[1].str()), v = std::stoul(match[2].str());
    if (h == 0 || v == 0)
        throw UsageError(std::string(flag) + ": element counts must be >= 1");
    return {h, v};
}

std::string shape_string(std::size_t h, std::size_t v)
{
    return std::to_string(h) + "x" + std::to_string(v);
}

struct RawOptions
{
    std::string tx = "64x2", rx = "4x2";
    std::string sweep = "distance", distance_mode = "exact", indexing = "literal", rank = "min-mn";
    std::string format = "csv", exec = "parallel";
    std::string out;
    std::vector<std::size_t> counts;
};

void add_common(CLI::App &sub, RunConfig &cfg, RawOptions &raw)
{
    sub.add_option("--freq-ghz", cfg.freq_ghz, "Carrier frequency in GHz")->capture_default_str();
    sub.add_option("--tx", raw.tx, "Transmit array NHxNV")->capture_default_str();
    sub.add_option("--rx", raw.rx, "Receive array MHxMV")->capture_default_str();
    sub.add_option("--snr-db", cfg.snr_db, "Transmit SNR P/N0 in dB")->capture_default_str();
    sub.add_option("--distance-start", cfg.distance_start, "First x_R in meters")->capture_default_str();
    sub.add_option("--distance-mode", raw.distance_mode, "exact|fresnel")->capture_default_str();
    sub.add_option("--indexing", raw.indexing, "literal|centered")->capture_default_str();
    sub.add_option("--out", raw.out, "Output path (stdout when absent)");
    sub.add_option("--exec", raw.exec, "parallel|serial kernels")->capture_default_str();
}

void check_ranges(const RunConfig &cfg)
{
    if (!std::isfinite(cfg.freq_ghz) || cfg.freq_ghz <= 0.0)
        throw UsageError("--freq-ghz must be > 0");
    if (!std::isfinite(cfg.snr_db))
        throw UsageError("--snr-db must be finite");
    if (!std::isfinite(cfg.distance_start) || cfg.distance_start <= 0.0)
        throw UsageError("--distance-start must be > 0 (x_R must be strictly positive)");
    if (!std::isfinite(cfg.distance_end) || cfg.distance_end < cfg.distance_start)
        throw UsageError("--distance-end must be >= --distance-start");
    if (!std::isfinite(cfg.distance_step) || cfg.distance_step <= 0.0)
        throw UsageError("--distance-step must be > 0");
}

std::vector<std::size_t> default_counts(SweepVariable v)
{
    switch (v)
    {
    case SweepVariable::tx_elements:
        return {16, 32, 64, 128, 256};
    case SweepVariable::rx_elements:
        return {8, 64, 128};
    case SweepVariable::distance_x_tx_grid:
        return {32, 64, 128, 256};
    case SweepVariable::distance:
        break;
    }
    return {};
}

void write_json(const std::vector<MetricsRow> &rows, const SweepMetadata &meta, std::ostream &os)
{
    // Values are rounded to the printed precision so that re-parsing gives them back exactly.
    auto num = [](double v) -> nlohmann::json {
        if (!std::isfinite(v))
            return nullptr;
        const std::string s = format_value(v);
        double back = 0.0;
        std::from_chars(s.data(), s.data() + s.size(), back);
        return back;
    };

    nlohmann::ordered_json doc;
    auto &m = doc["metadata"];
    m["freq_ghz"] = num(meta.freq_ghz);
    m["tx"] = meta.tx_shape;
    m["rx"] = meta.rx_shape;
    m["snr_db"] = num(meta.snr_db);
    m["sweep"] = meta.sweep;
    m["distance_mode"] = meta.distance_mode;
    m["indexing"] = meta.indexing;
    m["rank"] = meta.rank;
    m["rayleigh_m"] = num(meta.rayleigh_m);
    m["shape_rule"] = meta.shape_rule;

    auto &out_rows = doc["rows"] = nlohmann::ordered_json::array();
    for (const auto &r : rows)
    {
        nlohmann::ordered_json j;
        j["sweep_value"] = num(r.sweep_value);
        j["distance_m"] = num(r.distance_m);
        j["n_tx"] = r.n_tx;
        j["n_rx"] = r.n_rx;
        j["edof_exact"] = num(r.edof_exact);
        j["edof_closed"] = num(r.edof_closed);
        j["cap_edof"] = num(r.cap_edof);
        j["cap_closed"] = num(r.cap_closed);
        j["cap_oracle"] = num(r.cap_oracle);
        j["rank_r"] = r.rank_r;
        j["rayleigh_m"] = num(r.rayleigh_m);
        out_rows.push_back(std::move(j));
    }
    os << doc.dump(2) << '\n';
}

void write_csv(const std::vector<MetricsRow> &rows, const SweepMetadata &meta, std::ostream &os)
{
    os << "# freq_ghz=" << format_value(meta.freq_ghz) << '\n'
       << "# tx=" << meta.tx_shape << '\n'
       << "# rx=" << meta.rx_shape << '\n'
       << "# snr_db=" << format_value(meta.snr_db) << '\n'
       << "# sweep=" << meta.sweep << '\n'
       << "# distance_mode=" << meta.distance_mode << '\n'
       << "# indexing=" << meta.indexing << '\n'
       << "# rank=" << meta.rank << '\n'
       << "# rayleigh_m=" << format_value(meta.rayleigh_m) << '\n';
    if (meta.sweep != "distance")
    {
        os << "# rayleigh_m_per_row=";
        for (std::size_t i = 0; i < rows.size(); ++i)
            os << (i ? ";" : "") << format_value(rows[i].rayleigh_m);
        os << '\n';
    }
    os << "# shape_rule=" << meta.shape_rule << '\n';
    os << "sweep_value,distance_m,n_tx,n_rx,edof_exact,edof_closed,cap_edof,cap_closed,cap_oracle,rank_r\n";
    for (const auto &r : rows)
    {
        os << format_value(r.sweep_value) << ',' << format_value(r.distance_m) << ',' << r.n_tx << ',' << r.n_rx
           << ',' << format_value(r.edof_exact) << ',' << format_value(r.edof_closed) << ','
           << format_value(r.cap_edof) << ',' << format_value(r.cap_closed) << ',' << format_value(r.cap_oracle)
           << ',' << r.rank_r << '\n';
    }
}

} // namespace

RunConfig parse_args(int argc, const char *const *argv)
{
    RunConfig cfg;
    RawOptions raw;

    CLI::App app{"Near-field LOS MIMO channel, EDoF and capacity sweeps", "nfmimo"};
    app.require_subcommand(1);

    auto *run_cmd = app.add_subcommand("run", "Run a parameter sweep and emit a CSV/JSON table");
    add_common(*run_cmd, cfg, raw);
    run_cmd->add_option("--distance-end", cfg.distance_end, "Last x_R in meters")->capture_default_str();
    run_cmd->add_option("--distance-step", cfg.distance_step, "x_R increment in meters")->capture_default_str();
    run_cmd->add_option("--sweep", raw.sweep, "distance|tx|rx|grid")->capture_default_str();
    auto *counts_opt =
        run_cmd->add_option("--counts", raw.counts, "Element counts for tx/rx/grid sweeps")->delimiter(',');
    run_cmd->add_option("--rank", raw.rank, "auto|min-mn")->capture_default_str();
    run_cmd->add_option("--format", raw.format, "csv|json")->capture_default_str();

    auto *dump_cmd = app.add_subcommand("dump-channel", "Write H at x_R = --distance-start as m,n,re,im lines");
    add_common(*dump_cmd, cfg, raw);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &)
    {
        throw HelpRequested(app.help());
    }
    catch (const CLI::ParseError &e)
    {
        throw UsageError(e.what());
    }

    cfg.command = dump_cmd->parsed() ? Command::dump_channel : Command::run;
    std::tie(cfg.tx_h, cfg.tx_v) = parse_shape(raw.tx, "--tx");
    std::tie(cfg.rx_h, cfg.rx_v) = parse_shape(raw.rx, "--rx");
    cfg.sweep = lookup(kSweeps, raw.sweep, "--sweep");
    cfg.distance_mode = lookup(kDistanceModes, raw.distance_mode, "--distance-mode");
    cfg.indexing = lookup(kIndexing, raw.indexing, "--indexing");
    cfg.rank = lookup(kRanks, raw.rank, "--rank");
    cfg.format = lookup(kFormats, raw.format, "--format");
    cfg.exec = lookup(kExec, raw.exec, "--exec");
    if (!raw.out.empty())
        cfg.out = raw.out;

    if (counts_opt->count() > 0 && cfg.sweep == SweepVariable::distance)
        throw UsageError("--counts only applies to --sweep tx|rx|grid");
    cfg.counts = counts_opt->count() > 0 ? raw.counts : default_counts(cfg.sweep);
    for (auto c : cfg.counts)
        if (c < 2 || c % 2 != 0)
            throw UsageError("--counts: element counts must be even and >= 2 (shape rule (count/2)x2), got " +
                             std::to_string(c));
    check_ranges(cfg);
    return cfg;
}

RunConfig parse_args(const std::vector<std::string> &args)
{
    std::vector<const char *> argv;
    argv.reserve(args.size());
    for (const auto &a : args)
        argv.push_back(a.c_str());
    return parse_args(int(argv.size()), argv.data());
}

SweepSpec to_sweep_spec(const RunConfig &cfg)
{
    const double f = cfg.freq_ghz * 1e9;
    SweepSpec spec{
        .variable = cfg.sweep,
        .values = {},
        .grid_distances = {},
        .base_tx = ArrayConfig(cfg.tx_h, cfg.tx_v, f),
        .base_rx = ArrayConfig(cfg.rx_h, cfg.rx_v, f),
        .base_scenario = {},
        .methods = {},
        .rank_mode = cfg.rank,
        .rank_threshold = kDefaultRankThreshold,
        .exec = cfg.exec,
    };
    spec.base_scenario.rx_center = {cfg.distance_start, 0.0, 0.0};
    spec.base_scenario.snr_db = cfg.snr_db;
    spec.base_scenario.distance_mode = cfg.distance_mode;
    spec.base_scenario.indexing_mode = cfg.indexing;

    const auto distances = distance_grid(cfg.distance_start, cfg.distance_end, cfg.distance_step);
    if (cfg.sweep == SweepVariable::distance)
    {
        spec.values = distances;
    }
    else
    {
        for (auto c : cfg.counts)
            spec.values.push_back(double(c));
        if (cfg.sweep == SweepVariable::distance_x_tx_grid)
            spec.grid_distances = distances;
    }
    return spec;
}

SweepMetadata make_metadata(const RunConfig &cfg)
{
    const double f = cfg.freq_ghz * 1e9;
    return {
        .freq_ghz = cfg.freq_ghz,
        .tx_shape = shape_string(cfg.tx_h, cfg.tx_v),
        .rx_shape = shape_string(cfg.rx_h, cfg.rx_v),
        .snr_db = cfg.snr_db,
        .sweep = reverse_lookup(kSweeps, cfg.sweep),
        .distance_mode = reverse_lookup(kDistanceModes, cfg.distance_mode),
        .indexing = reverse_lookup(kIndexing, cfg.indexing),
        .rank = reverse_lookup(kRanks, cfg.rank),
        .rayleigh_m = rayleigh_distance(ArrayConfig(cfg.tx_h, cfg.tx_v, f), ArrayConfig(cfg.rx_h, cfg.rx_v, f)),
        .shape_rule = kShapeRule,
    };
}

std::string format_value(double v)
{
    if (std::isnan(v))
        return "nan";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 9);
    return std::string(buf, res.ptr);
}

void emit(const std::vector<MetricsRow> &rows, const SweepMetadata &meta, OutputFormat format, std::ostream &os)
{
    if (format == OutputFormat::json)
        write_json(rows, meta, os);
    else
        write_csv(rows, meta, os);
}

void emit(const std::vector<MetricsRow> &rows, const SweepMetadata &meta, OutputFormat format,
          const std::optional<std::string> &path, std::ostream &fallback)
{
    if (!path)
    {
        emit(rows, meta, format, fallback);
        return;
    }
    std::ofstream file(*path, std::ios::binary | std::ios::trunc);
    if (!file)
        throw IoError("cannot open '" + *path + "' for writing");
    emit(rows, meta, format, file);
    file.flush();
    if (!file)
        throw IoError("write to '" + *path + "' failed");
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    RunConfig cfg;
    try
    {
        cfg = parse_args(argc, argv);
    }
    catch (const HelpRequested &h)
    {
        out << h.what();
        return 0;
    }
    catch (const UsageError &e)
    {
        err << "usage error: " << e.what() << "\nRun with --help for usage.\n";
        return 2;
    }

    try
    {
        if (cfg.command == Command::dump_channel)
        {
            const double f = cfg.freq_ghz * 1e9;
            Scenario s;
            s.rx_center = {cfg.distance_start, 0.0, 0.0};
            s.snr_db = cfg.snr_db;
            s.distance_mode = cfg.distance_mode;
            s.indexing_mode = cfg.indexing;
            const auto h = build_channel_matrix(ArrayConfig(cfg.tx_h, cfg.tx_v, f), ArrayConfig(cfg.rx_h, cfg.rx_v, f),
                                                s, cfg.exec);
            if (!cfg.out)
            {
                write_channel_text(out, h);
                return 0;
            }
            std::ofstream file(*cfg.out, std::ios::binary | std::ios::trunc);
            if (!file)
                throw IoError("cannot open '" + *cfg.out + "' for writing");
            write_channel_text(file, h);
            file.flush();
            if (!file)
                throw IoError("write to '" + *cfg.out + "' failed");
            return 0;
        }

        const auto rows = run_sweep(to_sweep_spec(cfg));
        emit(rows, make_metadata(cfg), cfg.format, cfg.out, out);
        return 0;
    }
    catch (const IoError &e)
    {
        err << "I/O error: " << e.what() << '\n';
        return 1;
    }
    catch (const std::exception &e)
    {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace nearfield::cli
