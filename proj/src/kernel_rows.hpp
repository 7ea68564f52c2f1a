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

// Per-row arithmetic shared by the serial and OpenMP kernels. Both
// translation units call exactly these functions, which is what makes their
// results bitwise identical.

#include "nearfield/kernels.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace nearfield::kernels::detail
{

// Neumaier's variant of Kahan summation.
class CompensatedSum
{
public:
    void add(double x) noexcept
    {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            carry_ += (sum_ - t) + x;
        else
            carry_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const noexcept { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

inline double exact_distance(const Position3D &t, const Position3D &r) noexcept
{
    const double dx = r.x - t.x, dy = r.y - t.y, dz = r.z - t.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

inline double fresnel_distance(const Position3D &t, const Position3D &r, double x_r) noexcept
{
    const double dy = r.y - t.y, dz = r.z - t.z;
    return x_r + (dy * dy + dz * dz) / (2.0 * x_r);
}

inline std::complex<double> green(double d, double wavelength) noexcept
{
    const double k0 = 2.0 * std::numbers::pi / wavelength;
    return std::polar(1.0 / (4.0 * std::numbers::pi * d), -k0 * d);
}

// Column n of H (one Tx element against every Rx element).
inline void channel_column(const ChannelInputs &in, std::size_t n, CMatrix &h)
{
    const Position3D &t = in.tx[n];
    for (std::size_t m = 0; m < in.rx.size(); ++m)
    {
        const double d = in.mode == DistanceMode::exact ? exact_distance(t, in.rx[m])
                                                        : fresnel_distance(t, in.rx[m], in.x_r);
        h(Eigen::Index(m), Eigen::Index(n)) = green(d, in.wavelength_m);
    }
}

// Upper-triangle row a of R = H^H H, mirrored into the lower triangle.
inline void gram_row(const CMatrix &h, Eigen::Index a, CMatrix &r)
{
    const Eigen::Index rows = h.rows();
    const std::complex<double> *col_a = h.col(a).data();
    for (Eigen::Index b = a; b < h.cols(); ++b)
    {
        const std::complex<double> *col_b = h.col(b).data();
        double re = 0.0, im = 0.0;
        for (Eigen::Index m = 0; m < rows; ++m)
        {
            const double ar = col_a[m].real(), ai = col_a[m].imag();
            const double br = col_b[m].real(), bi = col_b[m].imag();
            re += ar * br + ai * bi;
            im += ar * bi - ai * br;
        }
        if (b == a)
        {
            r(a, a) = {re, 0.0};
        }
        else
        {
            r(a, b) = {re, im};
            r(b, a) = {re, -im};
        }
    }
}

inline double power_row(const CMatrix &r, Eigen::Index a)
{
    CompensatedSum s;
    for (Eigen::Index b = 0; b < r.cols(); ++b)
        s.add(std::norm(r(a, b)));
    return s.value();
}

inline TraceSums reduce_trace(const CMatrix &r, const std::vector<double> &row_power)
{
    CompensatedSum tr, tr2;
    for (Eigen::Index a = 0; a < r.rows(); ++a)
    {
        tr.add(r(a, a).real());
        tr2.add(row_power[std::size_t(a)]);
    }
    return {tr.value(), tr2.value()};
}

// sum_m 1/q(d) for Tx element n (0-based).
inline double inverse_q_row(const ClosedFormInputs &in, std::size_t n)
{
    const double i = double(n % in.tx_h), v = double(n / in.tx_h);
    const double x2 = in.rx_center.x * in.rx_center.x;
    CompensatedSum s;
    for (std::size_t m = 0; m < in.rx_h * in.rx_v; ++m)
    {
        const double k = double(m % in.rx_h), w = double(m / in.rx_h);
        const double dy = in.rx_center.y + (k - in.rx_off_h - i + in.tx_off_h) * in.spacing_m;
        const double dz = in.rx_center.z + (w - in.rx_off_v - v + in.tx_off_v) * in.spacing_m;
        s.add(1.0 / (x2 + dy * dy + dz * dz));
    }
    return s.value();
}

// sum_{n2} |sum_m exp(-j k0 f(d) / x_R)|^2 for Tx element n1 (0-based).
inline double coherent_row(const ClosedFormInputs &in, std::size_t n1)
{
    const std::size_t tx_count = in.tx_h * in.tx_v;
    const std::size_t rx_count = in.rx_h * in.rx_v;
    const double scale = in.wavenumber / in.rx_center.x;
    const double i1 = double(n1 % in.tx_h), v1 = double(n1 / in.tx_h);

    CompensatedSum row;
    for (std::size_t n2 = 0; n2 < tx_count; ++n2)
    {
        const double di = (i1 - double(n2 % in.tx_h)) * in.spacing_m;
        const double dv = (v1 - double(n2 / in.tx_h)) * in.spacing_m;
        CompensatedSum re, im;
        for (std::size_t m = 0; m < rx_count; ++m)
        {
            const double ym = in.rx_center.y + (double(m % in.rx_h) - in.rx_off_h) * in.spacing_m;
            const double zm = in.rx_center.z + (double(m / in.rx_h) - in.rx_off_v) * in.spacing_m;
            const double phase = -scale * (ym * di + zm * dv);
            re.add(std::cos(phase));
            im.add(std::sin(phase));
        }
        const double a = re.value(), b = im.value();
        row.add(a * a + b * b);
    }
    return row.value();
}

inline ClosedFormSums reduce_closed_form(const std::vector<double> &inv_q, const std::vector<double> &coherent)
{
    CompensatedSum num, den;
    for (double x : inv_q)
        num.add(x);
    for (double x : coherent)
        den.add(x);
    return {num.value(), den.value()};
}

} // namespace nearfield::kernels::detail
