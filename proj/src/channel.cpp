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

#include "nearfield/channel.hpp"
#include "nearfield/errors.hpp"

#include "kernel_rows.hpp"

#include <charconv>
#include <cmath>
#include <string>

namespace nearfield
{

ChannelMatrix::ChannelMatrix(CMatrix entries) : entries_(std::move(entries))
{
    if (!entries_.allFinite())
        throw DegenerateGeometryError("ChannelMatrix: non-finite entry");
}

CorrelationMatrix::CorrelationMatrix(CMatrix entries) : entries_(std::move(entries))
{
    if (entries_.rows() != entries_.cols())
        throw ShapeError("CorrelationMatrix: matrix must be square");
}

double distance_exact(const Position3D &t, const Position3D &r)
{
    const double d = kernels::detail::exact_distance(t, r);
    if (!(d > 0.0))
        throw DegenerateGeometryError("distance_exact: coincident points");
    return d;
}

double distance_fresnel(const Position3D &t, const Position3D &r, double x_r)
{
    if (!(x_r > 0.0))
        throw InvalidScenarioError("distance_fresnel: x_R must be > 0");
    if (t.x != 0.0)
        throw InvalidScenarioError("distance_fresnel: transmit element must lie on x = 0");
    return kernels::detail::fresnel_distance(t, r, x_r);
}

std::complex<double> green_gain(double d, double wavelength)
{
    if (!(d > 0.0) || !std::isfinite(d))
        throw DegenerateGeometryError("green_gain: distance must be positive and finite");
    if (!(wavelength > 0.0))
        throw InvalidScenarioError("green_gain: wavelength must be positive");
    return kernels::detail::green(d, wavelength);
}

ChannelMatrix build_channel_matrix(const ArrayConfig &tx, const ArrayConfig &rx, const Scenario &s, Exec exec)
{
    validate(s);
    if (tx.frequency_hz() != rx.frequency_hz())
        throw InvalidScenarioError("build_channel_matrix: Tx and Rx carrier frequencies differ");

    const auto tx_pos = tx_positions(tx, s.indexing_mode);
    const auto rx_pos = rx_positions(rx, s);
    // Tx sits on x = 0 and every Rx element on x = x_R > 0, so all distances are >= x_R.
    const kernels::ChannelInputs in{tx_pos, rx_pos, tx.wavelength_m(), s.distance_mode, s.rx_center.x};
    return ChannelMatrix(exec == Exec::serial ? kernels::serial::channel(in) : kernels::omp::channel(in));
}

CorrelationMatrix correlation_matrix(const ChannelMatrix &h, Exec exec)
{
    return CorrelationMatrix(exec == Exec::serial ? kernels::serial::gram(h.entries())
                                                  : kernels::omp::gram(h.entries()));
}

CVector received_field(const ChannelMatrix &h, const SignalVector &a)
{
    if (a.amplitudes.size() != h.tx_count())
        throw ShapeError("received_field: signal length " + std::to_string(a.amplitudes.size()) +
                         " != transmit elements " + std::to_string(h.tx_count()));
    if (!a.amplitudes.allFinite())
        throw InvalidScenarioError("received_field: non-finite amplitude");
    return h.entries() * a.amplitudes;
}

void write_channel_text(std::ostream &os, const ChannelMatrix &h)
{
    char re[32], im[32];
    for (Eigen::Index m = 0; m < h.rx_count(); ++m)
    {
        for (Eigen::Index n = 0; n < h.tx_count(); ++n)
        {
            const auto v = h(m, n);
            const auto r1 = std::to_chars(re, re + sizeof re, v.real());
            const auto r2 = std::to_chars(im, im + sizeof im, v.imag());
            os << (m + 1) << ',' << (n + 1) << ',' << std::string_view(re, std::size_t(r1.ptr - re)) << ','
               << std::string_view(im, std::size_t(r2.ptr - im)) << '\n';
        }
    }
}

} // namespace nearfield
