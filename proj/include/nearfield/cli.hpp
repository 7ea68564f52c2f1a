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

#pragma once

#include "nearfield/sweeps.hpp"

#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace nearfield::cli
{

enum class OutputFormat
{
    csv,
    json,
};

enum class Command
{
    run,
    dump_channel,
};

// Malformed or conflicting command line.
class UsageError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// --help was given; what() holds the help text.
class HelpRequested : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig
{
    Command command = Command::run;
    double freq_ghz = 13.0;
    std::size_t tx_h = 64, tx_v = 2;
    std::size_t rx_h = 4, rx_v = 2;
    double snr_db = 70.0;
    double distance_start = 1.0;
    double distance_end = 10.0;
    double distance_step = 0.5;
    SweepVariable sweep = SweepVariable::distance;
    std::vector<std::size_t> counts; // element counts for tx / rx / grid sweeps
    DistanceMode distance_mode = DistanceMode::exact;
    IndexingMode indexing = IndexingMode::literal;
    RankMode rank = RankMode::min_mn;
    OutputFormat format = OutputFormat::csv;
    std::optional<std::string> out;
    Exec exec = Exec::parallel;
};

RunConfig parse_args(int argc, const char *const *argv);
RunConfig parse_args(const std::vector<std::string> &args); // args[0] is the program name

SweepSpec to_sweep_spec(const RunConfig &cfg);

struct SweepMetadata
{
    double freq_ghz = 0.0;
    std::string tx_shape;
    std::string rx_shape;
    double snr_db = 0.0;
    std::string sweep;
    std::string distance_mode;
    std::string indexing;
    std::string rank;
    double rayleigh_m = 0.0; // base Tx/Rx configuration
    std::string shape_rule;
};

SweepMetadata make_metadata(const RunConfig &cfg);

// `%.9g`-equivalent, locale independent; "nan" for NaN.
std::string format_value(double v);

void emit(const std::vector<MetricsRow> &rows, const SweepMetadata &meta, OutputFormat format, std::ostream &os);

// Writes to `path`, or to `fallback` when no path is given. Throws IoError.
void emit(const std::vector<MetricsRow> &rows, const SweepMetadata &meta, OutputFormat format,
          const std::optional<std::string> &path, std::ostream &fallback);

// Full front end; returns the process exit status.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace nearfield::cli
