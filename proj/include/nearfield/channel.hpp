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

#include <complex>
#include <ostream>

namespace nearfield
{

/// M x N matrix of free-space Green's-function gains. Row m is receive
/// element m, column n is transmit element n (both 0-based here).
class ChannelMatrix
{
public:
    explicit ChannelMatrix(CMatrix entries);

    Eigen::Index rx_count() const noexcept { return entries_.rows(); }
    Eigen::Index tx_count() const noexcept { return entries_.cols(); }
    const CMatrix &entries() const noexcept { return entries_; }
    std::complex<double> operator()(Eigen::Index m, Eigen::Index n) const { return entries_(m, n); }

private:
    CMatrix entries_;
};

/// N x N Gram matrix R = H^H H. Exactly Hermitian when built by
/// correlation_matrix(); wrapping an arbitrary matrix is allowed for tests
/// and oracles.
class CorrelationMatrix
{
public:
    explicit CorrelationMatrix(CMatrix entries);

    Eigen::Index size() const noexcept { return entries_.rows(); }
    const CMatrix &entries() const noexcept { return entries_; }
    std::complex<double> operator()(Eigen::Index a, Eigen::Index b) const { return entries_(a, b); }

private:
    CMatrix entries_;
};

struct SignalVector
{
    CVector amplitudes;
};

double distance_exact(const Position3D &t, const Position3D &r);

// Paraxial expansion x_R + ((dy)^2 + (dz)^2) / (2 x_R). t must lie on the x = 0 plane.
double distance_fresnel(const Position3D &t, const Position3D &r, double x_r);

// exp(-j k0 d) / (4 pi d), k0 = 2 pi / wavelength.
std::complex<double> green_gain(double d, double wavelength);

ChannelMatrix build_channel_matrix(const ArrayConfig &tx, const ArrayConfig &rx, const Scenario &s,
                                   Exec exec = Exec::parallel);

CorrelationMatrix correlation_matrix(const ChannelMatrix &h, Exec exec = Exec::parallel);

// Receive-side field E = H a.
CVector received_field(const ChannelMatrix &h, const SignalVector &a);

// Debug dump, one `m,n,re,im` line per entry with 1-based indices and
// shortest round-trip decimal values.
void write_channel_text(std::ostream &os, const ChannelMatrix &h);

} // namespace nearfield
