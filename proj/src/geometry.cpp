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

#include "nearfield/geometry.hpp"
#include "nearfield/errors.hpp"

#include <cmath>
#include <string>

namespace nearfield
{

ArrayConfig::ArrayConfig(std::size_t count_h, std::size_t count_v, double frequency_hz,
                         std::optional<double> spacing_m)
    : count_h_(count_h), count_v_(count_v), frequency_hz_(frequency_hz), spacing_m_(0.0)
{
    if (count_h == 0 || count_v == 0)
        throw InvalidScenarioError("ArrayConfig: element counts must be >= 1");
    if (!std::isfinite(frequency_hz) || frequency_hz <= 0.0)
        throw InvalidScenarioError("ArrayConfig: frequency must be positive and finite");
    spacing_m_ = spacing_m.value_or(wavelength_m() / 2.0);
    if (!std::isfinite(spacing_m_) || spacing_m_ <= 0.0)
        throw InvalidScenarioError("ArrayConfig: spacing must be positive and finite");
}

double ArrayConfig::diagonal_m() const noexcept
{
    return spacing_m_ * std::hypot(double(count_h_ - 1), double(count_v_ - 1));
}

void validate(const Scenario &s)
{
    const auto &c = s.rx_center;
    if (!std::isfinite(c.x) || !std::isfinite(c.y) || !std::isfinite(c.z))
        throw InvalidScenarioError("Scenario: receive center must be finite");
    if (c.x <= 0.0)
        throw InvalidScenarioError("Scenario: x_R must be > 0, got " + std::to_string(c.x));
    if (!std::isfinite(s.snr_db))
        throw InvalidScenarioError("Scenario: SNR must be finite");
}

PlanarIndex planar_indices(std::size_t n, std::size_t count_h, std::size_t count_v)
{
    if (count_h == 0 || n < 1 || n > count_h * count_v)
        throw IndexError("element index " + std::to_string(n) + " outside [1, " +
                         std::to_string(count_h * count_v) + "]");
    return {(n - 1) % count_h, (n - 1) / count_h};
}

double index_offset(std::size_t count, IndexingMode mode) noexcept
{
    return mode == IndexingMode::literal ? double(count) : (double(count) - 1.0) / 2.0;
}

namespace
{

Position3D grid_point(const PlanarIndex &idx, const ArrayConfig &cfg, IndexingMode mode,
                      const Position3D &center)
{
    const double dl = cfg.spacing_m();
    return {center.x,
            center.y + (double(idx.horizontal) - index_offset(cfg.count_h(), mode)) * dl,
            center.z + (double(idx.vertical) - index_offset(cfg.count_v(), mode)) * dl};
}

} // namespace

Position3D tx_element_position(std::size_t n, const ArrayConfig &cfg, IndexingMode mode)
{
    return grid_point(planar_indices(n, cfg.count_h(), cfg.count_v()), cfg, mode, {});
}

Position3D rx_element_position(std::size_t m, const ArrayConfig &cfg, const Scenario &scenario)
{
    return grid_point(planar_indices(m, cfg.count_h(), cfg.count_v()), cfg, scenario.indexing_mode,
                      scenario.rx_center);
}

std::vector<Position3D> tx_positions(const ArrayConfig &cfg, IndexingMode mode)
{
    std::vector<Position3D> out;
    out.reserve(cfg.size());
    for (std::size_t n = 1; n <= cfg.size(); ++n)
        out.push_back(tx_element_position(n, cfg, mode));
    return out;
}

std::vector<Position3D> rx_positions(const ArrayConfig &cfg, const Scenario &scenario)
{
    std::vector<Position3D> out;
    out.reserve(cfg.size());
    for (std::size_t m = 1; m <= cfg.size(); ++m)
        out.push_back(rx_element_position(m, cfg, scenario));
    return out;
}

double rayleigh_distance(const ArrayConfig &tx, const ArrayConfig &rx)
{
    const double d = tx.diagonal_m() + rx.diagonal_m();
    return 2.0 * d * d / tx.wavelength_m();
}

} // namespace nearfield
