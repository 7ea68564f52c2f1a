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

// Data-parallel kernels behind the channel and metrics modules.
//
// Every kernel exists twice: `serial` is the reference loop nest, `omp` runs
// the same per-row arithmetic under OpenMP. Row partial sums are reduced in
// index order after the parallel region, so both variants return bitwise
// identical results for any thread count.

#include "nearfield/geometry.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <span>

namespace nearfield
{

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

enum class Exec
{
    serial,
    parallel,
};

namespace kernels
{

struct ChannelInputs
{
    std::span<const Position3D> tx;
    std::span<const Position3D> rx;
    double wavelength_m = 0.0;
    DistanceMode mode = DistanceMode::exact;
    double x_r = 0.0; // reference depth for the Fresnel expansion
};

struct TraceSums
{
    double trace = 0.0;         // tr(R)
    double trace_squared = 0.0; // tr(R^2) = sum |R(a,b)|^2 for Hermitian R
};

// Index-form inputs of the closed-form EDoF. Offsets are the values
// subtracted from the 0-based grid indices (count for literal layout,
// (count-1)/2 for centered).
struct ClosedFormInputs
{
    std::size_t tx_h = 0, tx_v = 0;
    std::size_t rx_h = 0, rx_v = 0;
    double tx_off_h = 0.0, tx_off_v = 0.0;
    double rx_off_h = 0.0, rx_off_v = 0.0;
    double spacing_m = 0.0;
    double wavenumber = 0.0; // 2 pi / lambda
    Position3D rx_center;
};

struct ClosedFormSums
{
    double inverse_q_sum = 0.0;   // sum_n sum_m 1/q(d)
    double coherent_power = 0.0; // sum_{n1,n2} |sum_m exp(-j k0 f(d) / x_R)|^2
};

namespace serial
{
CMatrix channel(const ChannelInputs &in);
CMatrix gram(const CMatrix &h); // H^H H
TraceSums trace_sums(const CMatrix &r);
ClosedFormSums closed_form_sums(const ClosedFormInputs &in);
} // namespace serial

namespace omp
{
CMatrix channel(const ChannelInputs &in);
CMatrix gram(const CMatrix &h);
TraceSums trace_sums(const CMatrix &r);
ClosedFormSums closed_form_sums(const ClosedFormInputs &in);

int max_threads() noexcept;
} // namespace omp

} // namespace kernels
} // namespace nearfield
