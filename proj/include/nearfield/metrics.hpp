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

#include "nearfield/channel.hpp"
#include "nearfield/geometry.hpp"

#include <cstddef>

namespace nearfield
{

inline constexpr double kDefaultRankThreshold = 1e-12;

enum class EdofMethod
{
    exact_trace,
    closed_form,
    eigen,
};

// How the SNR-splitting rank r is chosen.
enum class RankMode
{
    automatic, // eigenvalue count above threshold * lambda_max
    min_mn,    // pinned to min(M, N)
};

struct EdofResult
{
    double beta = 1.0;
    double trace_r = 1.0;
    double trace_r_squared = 1.0;
    EdofMethod method = EdofMethod::exact_trace;

    // Traces chosen so that trace_r^2 / trace_r_squared == beta.
    static EdofResult from_beta(double beta, EdofMethod method = EdofMethod::exact_trace)
    {
        return {beta, beta, beta, method};
    }
};

struct CapacityResult
{
    double capacity_bps_hz = 0.0;
    EdofResult edof;
    std::size_t rank_r = 1;
    double snr_db = 0.0;
};

double db_to_linear(double db) noexcept;

/// EDoF from the traces of R: (tr R)^2 / tr(R^2), with tr(R^2) taken as the
/// squared Frobenius norm. Throws UndefinedMetricError for R = 0.
EdofResult edof_exact(const CorrelationMatrix &r, Exec exec = Exec::parallel);

/// Closed-form EDoF evaluated directly from array indices.
///
/// Numerator |sum_n sum_m 1/q(d)|^2 keeps the per-pair squared distances;
/// the denominator replaces every amplitude by 1/x_R^2 and keeps only the
/// m-dependent part f(d) of the Fresnel phase. The result therefore departs
/// from edof_exact() in the deep near field.
///
/// In literal indexing the offsets are N_h, N_v, M_h, M_v; in centered
/// indexing they are (count - 1) / 2.
EdofResult edof_closed_form(const ArrayConfig &tx, const ArrayConfig &rx, const Scenario &s,
                            Exec exec = Exec::parallel);

// Eigenvalues of R in ascending order (Hermitian solver).
Eigen::VectorXd eigenvalues(const CorrelationMatrix &r);

// Eigenvalues of the smaller of H^H H and H H^H; same nonzero spectrum as R.
Eigen::VectorXd gram_eigenvalues(const ChannelMatrix &h);

// (sum lambda)^2 / sum lambda^2 over the spectrum. Oracle for edof_exact().
EdofResult edof_eigen(const Eigen::VectorXd &spectrum);

std::size_t rank_from_spectrum(const Eigen::VectorXd &spectrum, double rel_threshold = kDefaultRankThreshold);
std::size_t eigen_rank(const CorrelationMatrix &r, double rel_threshold = kDefaultRankThreshold);

// C = beta log2(1 + snr / r).
CapacityResult capacity_edof(const EdofResult &edof, std::size_t rank_r, double snr_db);

// capacity_edof(edof_closed_form(...), rank_r, s.snr_db).
CapacityResult capacity_closed_form(const ArrayConfig &tx, const ArrayConfig &rx, const Scenario &s,
                                    std::size_t rank_r, Exec exec = Exec::parallel);

// Equal power per transmit element: sum_i log2(1 + (snr / N) lambda_i) over
// the eigenvalues of H^H H. No channel normalization.
double capacity_eigen_oracle(const ChannelMatrix &h, double snr_db);
double capacity_from_spectrum(const Eigen::VectorXd &spectrum, Eigen::Index tx_count, double snr_db);

} // namespace nearfield
