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

#include <cstddef>
#include <optional>
#include <vector>

namespace nearfield
{

inline constexpr double kSpeedOfLight = 299'792'458.0; // m/s, exact

enum class IndexingMode
{
    literal,  // offsets exactly as printed: (i - N_h) * spacing, (v - N_v) * spacing
    centered, // symmetric about the array center: (i - (N_h - 1) / 2) * spacing
};

enum class DistanceMode
{
    exact,   // Euclidean norm
    fresnel, // second-order Taylor expansion about x_R
};

struct Position3D
{
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend bool operator==(const Position3D &, const Position3D &) = default;
};

struct PlanarIndex
{
    std::size_t horizontal = 0; // i(n) / k(m)
    std::size_t vertical = 0;   // v(n) / w(m)

    friend bool operator==(const PlanarIndex &, const PlanarIndex &) = default;
};

/// Uniform planar array in the Y-Z plane, broadside along +X.
///
/// Construction validates the invariants; the spacing defaults to half a
/// wavelength at the carrier frequency.
class ArrayConfig
{
public:
    ArrayConfig(std::size_t count_h, std::size_t count_v, double frequency_hz,
                std::optional<double> spacing_m = std::nullopt);

    std::size_t count_h() const noexcept { return count_h_; }
    std::size_t count_v() const noexcept { return count_v_; }
    std::size_t size() const noexcept { return count_h_ * count_v_; }
    double spacing_m() const noexcept { return spacing_m_; }
    double frequency_hz() const noexcept { return frequency_hz_; }
    double wavelength_m() const noexcept { return kSpeedOfLight / frequency_hz_; }

    // Corner-to-corner extent of the element grid.
    double diagonal_m() const noexcept;

    friend bool operator==(const ArrayConfig &, const ArrayConfig &) = default;

private:
    std::size_t count_h_;
    std::size_t count_v_;
    double frequency_hz_;
    double spacing_m_;
};

struct Scenario
{
    Position3D rx_center{1.0, 0.0, 0.0};
    double snr_db = 70.0;
    DistanceMode distance_mode = DistanceMode::exact;
    IndexingMode indexing_mode = IndexingMode::literal;
};

// Throws InvalidScenarioError unless rx_center.x > 0 and everything is finite.
void validate(const Scenario &scenario);

// 1-based element index -> (mod(n-1, count_h), floor((n-1)/count_h)).
PlanarIndex planar_indices(std::size_t n, std::size_t count_h, std::size_t count_v);

// Grid offset subtracted from each index: count for literal, (count-1)/2 for centered.
double index_offset(std::size_t count, IndexingMode mode) noexcept;

Position3D tx_element_position(std::size_t n, const ArrayConfig &cfg, IndexingMode mode);
Position3D rx_element_position(std::size_t m, const ArrayConfig &cfg, const Scenario &scenario);

// All elements in index order (element n at position n-1).
std::vector<Position3D> tx_positions(const ArrayConfig &cfg, IndexingMode mode);
std::vector<Position3D> rx_positions(const ArrayConfig &cfg, const Scenario &scenario);

// 2 (D_tx + D_rx)^2 / lambda with D the array diagonal. Uses the Tx carrier.
double rayleigh_distance(const ArrayConfig &tx, const ArrayConfig &rx);

} // namespace nearfield
