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

#include <catch2/catch_amalgamated.hpp>

#include "nearfield/cli.hpp"

#include <json.hpp>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace nearfield;
using namespace nearfield::cli;

namespace
{

RunConfig parse(std::vector<std::string> args)
{
    args.insert(args.begin(), "nfmimo");
    return parse_args(args);
}

int invoke(std::vector<std::string> args, std::string &out, std::string &err)
{
    args.insert(args.begin(), "nfmimo");
    std::vector<const char *> argv;
    for (const auto &a : args)
        argv.push_back(a.c_str());
    std::ostringstream o, e;
    const int rc = run(int(argv.size()), argv.data(), o, e);
    out = o.str();
    err = e.str();
    return rc;
}

std::vector<std::string> lines_of(const std::string &text)
{
    std::vector<std::string> out;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);)
        out.push_back(line);
    return out;
}

std::string slurp(const std::filesystem::path &p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

const std::string kHeader = "sweep_value,distance_m,n_tx,n_rx,edof_exact,edof_closed,cap_edof,cap_closed,cap_oracle,rank_r";

} // namespace

TEST_CASE("parse_args - defaults mirror the measurement setup")
{
    const auto cfg = parse({"run"});
    CHECK(cfg.command == Command::run);
    CHECK(cfg.freq_ghz == 13.0);
    CHECK(cfg.tx_h == 64);
    CHECK(cfg.tx_v == 2);
    CHECK(cfg.rx_h == 4);
    CHECK(cfg.rx_v == 2);
    CHECK(cfg.snr_db == 70.0);
    CHECK(cfg.distance_start == 1.0);
    CHECK(cfg.distance_end == 10.0);
    CHECK(cfg.distance_step == 0.5);
    CHECK(cfg.sweep == SweepVariable::distance);
    CHECK(cfg.distance_mode == DistanceMode::exact);
    CHECK(cfg.indexing == IndexingMode::literal);
    CHECK(cfg.rank == RankMode::min_mn);
    CHECK(cfg.format == OutputFormat::csv);
    CHECK_FALSE(cfg.out.has_value());

    const auto spec = to_sweep_spec(cfg);
    CHECK(spec.values.size() == 19);
    CHECK(spec.base_tx.size() == 128);
    CHECK(spec.base_rx.size() == 8);
    CHECK(spec.base_scenario.snr_db == 70.0);
}

TEST_CASE("parse_args - explicit values")
{
    const auto cfg = parse({"run", "--tx", "8x2", "--rx", "1x1", "--sweep", "rx", "--counts", "2,4",
                            "--distance-mode", "fresnel", "--indexing", "centered", "--rank", "auto",
                            "--format", "json", "--out", "x.json", "--freq-ghz", "6.5", "--snr-db", "30"});
    CHECK(cfg.tx_h * cfg.tx_v == 16);
    CHECK(cfg.rx_h * cfg.rx_v == 1);
    CHECK(cfg.sweep == SweepVariable::rx_elements);
    CHECK(cfg.counts == std::vector<std::size_t>{2, 4});
    CHECK(cfg.distance_mode == DistanceMode::fresnel);
    CHECK(cfg.indexing == IndexingMode::centered);
    CHECK(cfg.rank == RankMode::automatic);
    CHECK(cfg.format == OutputFormat::json);
    CHECK(cfg.out == "x.json");
    CHECK(cfg.freq_ghz == 6.5);
    CHECK(cfg.snr_db == 30.0);

    CHECK(parse({"run", "--sweep", "tx"}).counts == std::vector<std::size_t>{16, 32, 64, 128, 256});
    CHECK(parse({"run", "--sweep", "rx"}).counts == std::vector<std::size_t>{8, 64, 128});
}

TEST_CASE("parse_args - rejects malformed and conflicting input")
{
    CHECK_THROWS_AS(parse({"run", "--distance-start", "0"}), UsageError);
    CHECK_THROWS_AS(parse({"run", "--distance-start", "-2"}), UsageError);
    CHECK_THROWS_AS(parse({"run", "--distance-start", "5", "--distance-end", "2"}), UsageError);
    CHECK_THROWS_AS(parse({"run", "--distance-step", "0"}), UsageError);
    CHECK_THROWS_AS(parse({"run", "--tx", "64"}), UsageError);
    CHECK_THROWS_AS(parse({"run", "--tx", "0x2"}), UsageError);
    CHECK_THROWS_AS(parse({"run", "--rx", "4by2"}), UsageError);
    CHECK_THROWS_AS(parse({"run", "--sweep", "angle"}), UsageError);
    CHECK_THROWS_AS(parse({"run", "--format", "xml"}), UsageError);
    CHECK_THROWS_AS(parse({"run", "--bogus", "1"}), UsageError);
    CHECK_THROWS_AS(parse({"run", "--freq-ghz", "abc"}), UsageError);
    CHECK_THROWS_AS(parse({"run", "--freq-ghz", "0"}), UsageError);
    CHECK_THROWS_AS(parse({"run", "--counts", "8,16"}), UsageError); // distance sweep has no counts
    CHECK_THROWS_AS(parse({"run", "--sweep", "tx", "--counts", "7"}), UsageError);
    CHECK_THROWS_AS(parse({}), UsageError);
    CHECK_THROWS_AS(parse({"run", "--help"}), HelpRequested);
}

TEST_CASE("format_value - 9 significant digits, dot separator")
{
    CHECK(format_value(1.0) == "1");
    CHECK(format_value(0.5) == "0.5");
    CHECK(format_value(23.25349680848103) == "23.2534968");
    CHECK(format_value(1.7086288198726205) == "1.70862882");
    CHECK(format_value(1e-20) == "1e-20");
    CHECK(format_value(std::nan("")) == "nan");
}

TEST_CASE("emit - CSV layout")
{
    const auto cfg = parse({"run"});
    const auto meta = make_metadata(cfg);

    std::ostringstream empty;
    emit({}, meta, OutputFormat::csv, empty);
    const auto e = lines_of(empty.str());
    REQUIRE_FALSE(e.empty());
    CHECK(e.back() == kHeader);
    for (std::size_t i = 0; i + 1 < e.size(); ++i)
        CHECK(e[i].rfind("# ", 0) == 0);
    CHECK(e[0] == "# freq_ghz=13");
    CHECK(std::find(e.begin(), e.end(), "# rayleigh_m=" + format_value(meta.rayleigh_m)) != e.end());
    CHECK(std::find(e.begin(), e.end(), std::string("# shape_rule=") + kShapeRule) != e.end());

    auto spec = to_sweep_spec(parse({"run", "--distance-end", "5.5"}));
    const auto rows = run_sweep(spec);
    REQUIRE(rows.size() == 10);
    std::ostringstream os;
    emit(rows, meta, OutputFormat::csv, os);
    const auto l = lines_of(os.str());
    const auto header = std::find(l.begin(), l.end(), kHeader);
    REQUIRE(header != l.end());
    REQUIRE(l.end() - header - 1 == 10);
    for (std::size_t i = 0; i < rows.size(); ++i)
    {
        const auto &line = *(header + 1 + std::ptrdiff_t(i));
        CHECK(line.rfind(format_value(rows[i].sweep_value) + ",", 0) == 0);
        CHECK(std::count(line.begin(), line.end(), ',') == 9);
    }
}

TEST_CASE("emit - JSON round-trips at printed precision")
{
    const auto cfg = parse({"run", "--distance-end", "3"});
    const auto rows = run_sweep(to_sweep_spec(cfg));
    std::ostringstream os;
    emit(rows, make_metadata(cfg), OutputFormat::json, os);
    const auto doc = nlohmann::json::parse(os.str());
    CHECK(doc["metadata"]["tx"] == "64x2");
    CHECK(doc["metadata"]["shape_rule"] == kShapeRule);
    REQUIRE(doc["rows"].size() == rows.size());

    auto printed = [](double v) {
        const auto s = format_value(v);
        double back = 0;
        std::from_chars(s.data(), s.data() + s.size(), back);
        return back;
    };
    for (std::size_t i = 0; i < rows.size(); ++i)
    {
        const auto &j = doc["rows"][i];
        CHECK(j["sweep_value"].get<double>() == printed(rows[i].sweep_value));
        CHECK(j["edof_exact"].get<double>() == printed(rows[i].edof_exact));
        CHECK(j["edof_closed"].get<double>() == printed(rows[i].edof_closed));
        CHECK(j["cap_edof"].get<double>() == printed(rows[i].cap_edof));
        CHECK(j["cap_closed"].get<double>() == printed(rows[i].cap_closed));
        CHECK(j["cap_oracle"].get<double>() == printed(rows[i].cap_oracle));
        CHECK(j["rank_r"].get<std::size_t>() == rows[i].rank_r);
        CHECK(j["n_tx"].get<std::size_t>() == 128);
    }
}

TEST_CASE("run - exit codes and byte-identical output")
{
    const auto dir = std::filesystem::temp_directory_path() / "nfmimo_cli_test";
    std::filesystem::create_directories(dir);
    const auto a = dir / "a.csv", b = dir / "b.csv";
    std::string out, err;

    REQUIRE(invoke({"run", "--out", a.string()}, out, err) == 0);
    REQUIRE(invoke({"run", "--out", b.string()}, out, err) == 0);
    const auto ta = slurp(a);
    CHECK_FALSE(ta.empty());
    CHECK(ta == slurp(b));

    CHECK(invoke({"run", "--distance-end", "2"}, out, err) == 0);
    CHECK(out.find(kHeader) != std::string::npos);

    CHECK(invoke({"run", "--distance-start", "0"}, out, err) != 0);
    CHECK(err.find("usage error") != std::string::npos);

    CHECK(invoke({"run", "--out", (dir / "missing" / "x.csv").string()}, out, err) != 0);
    CHECK(err.find("I/O error") != std::string::npos);

    CHECK(invoke({"--help"}, out, err) == 0);
    CHECK(out.find("run") != std::string::npos);

    CHECK(invoke({"dump-channel", "--tx", "2x1", "--rx", "1x1"}, out, err) == 0);
    CHECK(lines_of(out).size() == 2);
    CHECK(out.rfind("1,1,", 0) == 0);

    std::filesystem::remove_all(dir);
}
