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

#include "nearfield/geometry.hpp"
#include "nearfield/kernels.hpp"
#include "nearfield/metrics.hpp"

#include <string>
#include <vector>

namespace nearfield
{

enum class SweepVariable
{
    distance,           // values are x_R in meters
    tx_elements,        // values are N, shaped (N/2) x 2
    rx_elements,        // values are M, shaped (M/2) x 2
    distance_x_tx_grid, // values are N; grid_distances is the inner axis
};

struct MethodSet
{
    bool exact_trace = true;
    bool closed_form = true;
    bool eigen_oracle = true;
};

inline constexpr const char *kShapeRule = "element-count sweeps use (count/2)x2";

struct SweepSpec
{
    SweepVariable variable = SweepVariable::distance;
    std::vector<double> values;
    std::vector<double> grid_distances; // distance_x_tx_grid only
    ArrayConfig base_tx{64, 2, 13e9};
    ArrayConfig base_rx{4, 2, 13e9};
    Scenario base_scenario;
    MethodSet methods;
    RankMode rank_mode = RankMode::min_mn;
    double rank_threshold = kDefaultRankThreshold;
    Exec exec = Exec::parallel;
};

/// One sweep point. Columns whose method is disabled hold NaN.
struct MetricsRow
{
    double sweep_value = 0.0;
    double distance_m = 0.0;
    std::size_t n_tx = 0;
    std::size_t n_rx = 0;
    double edof_exact = 0.0;
    double edof_closed = 0.0;
    double cap_edof = 0.0;
    double cap_closed = 0.0;
    double cap_oracle = 0.0;
    std::size_t rank_r = 0;
    double rayleigh_m = 0.0; // metadata, not a CSV column
};

struct PaperScenario
{
    ArrayConfig tx;
    ArrayConfig rx;
    Scenario scenario;
};

// 13 GHz, Tx 64x2, Rx 4x2, half-wavelength spacing, 70 dB, receive center (1, 0, 0).
PaperScenario default_paper_scenario();

// (count/2) x 2 under the element-count shape rule.
ArrayConfig shaped_array(std::size_t count, double frequency_hz);

// Evaluates one geometry with every enabled method.
MetricsRow evaluate_point(const ArrayConfig &tx, const ArrayConfig &rx, const Scenario &s, const SweepSpec &spec,
                          double sweep_value);

// Rows in spec order; throws SweepError naming the failing point.
std::vector<MetricsRow> run_sweep(const SweepSpec &spec);

// start, start + step, ... up to end (inclusive within 1e-9 step).
std::vector<double> distance_grid(double start, double end, double step);

std::string to_string(SweepVariable v);

} // namespace nearfield
