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

#include "nearfield/sweeps.hpp"
#include "nearfield/channel.hpp"
#include "nearfield/errors.hpp"

#include <cmath>
#include <algorithm>
#include <limits>
#include <optional>
#include <sstream>

namespace nearfield
{

namespace
{

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::size_t as_count(double v)
{
    if (!(v >= 1.0) || v != std::floor(v) || v > 1e9)
        throw InvalidScenarioError("element count must be a positive integer");
    return std::size_t(v);
}

void check_values(const std::vector<double> &values, const char *what)
{
    if (values.empty())
        throw InvalidScenarioError(std::string("sweep: ") + what + " is empty");
    for (std::size_t i = 1; i < values.size(); ++i)
        if (!(values[i] > values[i - 1]))
            throw InvalidScenarioError(std::string("sweep: ") + what + " must be strictly increasing");
}

} // namespace

PaperScenario default_paper_scenario()
{
    constexpr double f = 13e9;
    Scenario s;
    s.rx_center = {1.0, 0.0, 0.0};
    s.snr_db = 70.0;
    return {ArrayConfig(64, 2, f), ArrayConfig(4, 2, f), s};
}

ArrayConfig shaped_array(std::size_t count, double frequency_hz)
{
    if (count < 2 || count % 2 != 0)
        throw InvalidScenarioError("shape rule (count/2)x2 needs an even count >= 2, got " + std::to_string(count));
    return ArrayConfig(count / 2, 2, frequency_hz);
}

MetricsRow evaluate_point(const ArrayConfig &tx, const ArrayConfig &rx, const Scenario &s, const SweepSpec &spec,
                          double sweep_value)
{
    MetricsRow row;
    row.sweep_value = sweep_value;
    row.distance_m = s.rx_center.x;
    row.n_tx = tx.size();
    row.n_rx = rx.size();
    row.rayleigh_m = rayleigh_distance(tx, rx);
    row.edof_exact = row.edof_closed = row.cap_edof = row.cap_closed = row.cap_oracle = kNaN;

    const bool need_channel = spec.methods.exact_trace || spec.methods.eigen_oracle ||
                              spec.rank_mode == RankMode::automatic;
    const auto h = need_channel ? std::optional<ChannelMatrix>(build_channel_matrix(tx, rx, s, spec.exec))
                                : std::nullopt;

    Eigen::VectorXd spectrum;
    if (spec.methods.eigen_oracle || spec.rank_mode == RankMode::automatic)
        spectrum = gram_eigenvalues(*h);

    row.rank_r = spec.rank_mode == RankMode::min_mn ? std::min(row.n_tx, row.n_rx)
                                                    : rank_from_spectrum(spectrum, spec.rank_threshold);

    if (spec.methods.exact_trace)
    {
        const auto edof = edof_exact(correlation_matrix(*h, spec.exec), spec.exec);
        row.edof_exact = edof.beta;
        row.cap_edof = capacity_edof(edof, row.rank_r, s.snr_db).capacity_bps_hz;
    }
    if (spec.methods.closed_form)
    {
        const auto c = capacity_closed_form(tx, rx, s, row.rank_r, spec.exec);
        row.edof_closed = c.edof.beta;
        row.cap_closed = c.capacity_bps_hz;
    }
    if (spec.methods.eigen_oracle)
        row.cap_oracle = capacity_from_spectrum(spectrum, h->tx_count(), s.snr_db);
    return row;
}

std::vector<MetricsRow> run_sweep(const SweepSpec &spec)
{
    check_values(spec.values, "values");
    if (spec.variable == SweepVariable::distance_x_tx_grid)
        check_values(spec.grid_distances, "grid distances");

    const double f = spec.base_tx.frequency_hz();
    std::vector<MetricsRow> rows;
    std::size_t index = 0;

    auto point = [&](double value, auto &&eval) {
        try
        {
            rows.push_back(eval());
        }
        catch (const std::exception &e)
        {
            std::ostringstream msg;
            msg << "sweep point " << index << " (" << to_string(spec.variable) << '=' << value
                << "): " << e.what();
            throw SweepError(msg.str());
        }
        ++index;
    };

    for (double value : spec.values)
    {
        switch (spec.variable)
        {
        case SweepVariable::distance:
            point(value, [&] {
                Scenario s = spec.base_scenario;
                s.rx_center.x = value;
                return evaluate_point(spec.base_tx, spec.base_rx, s, spec, value);
            });
            break;
        case SweepVariable::tx_elements:
            point(value, [&] {
                return evaluate_point(shaped_array(as_count(value), f), spec.base_rx, spec.base_scenario, spec,
                                      value);
            });
            break;
        case SweepVariable::rx_elements:
            point(value, [&] {
                return evaluate_point(spec.base_tx, shaped_array(as_count(value), f), spec.base_scenario, spec,
                                      value);
            });
            break;
        case SweepVariable::distance_x_tx_grid:
            for (double d : spec.grid_distances)
            {
                point(value, [&] {
                    Scenario s = spec.base_scenario;
                    s.rx_center.x = d;
                    return evaluate_point(shaped_array(as_count(value), f), spec.base_rx, s, spec, value);
                });
            }
            break;
        }
    }
    return rows;
}

std::vector<double> distance_grid(double start, double end, double step)
{
    if (!std::isfinite(start) || !std::isfinite(end) || !std::isfinite(step))
        throw InvalidScenarioError("distance grid: non-finite bound");
    if (!(step > 0.0))
        throw InvalidScenarioError("distance grid: step must be > 0");
    if (end < start)
        throw InvalidScenarioError("distance grid: end < start");
    const auto count = std::size_t(std::floor((end - start) / step + 1e-9)) + 1;
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i)
        out[i] = start + double(i) * step;
    return out;
}

std::string to_string(SweepVariable v)
{
    switch (v)
    {
    case SweepVariable::distance:
        return "distance";
    case SweepVariable::tx_elements:
        return "tx";
    case SweepVariable::rx_elements:
        return "rx";
    case SweepVariable::distance_x_tx_grid:
        return "grid";
    }
    return "?";
}

} // namespace nearfield
