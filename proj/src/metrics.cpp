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

#include "nearfield/metrics.hpp"
#include "nearfield/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace nearfield
{

double db_to_linear(double db) noexcept
{
    return std::pow(10.0, db / 10.0);
}

EdofResult edof_exact(const CorrelationMatrix &r, Exec exec)
{
    const auto sums = exec == Exec::serial ? kernels::serial::trace_sums(r.entries())
                                           : kernels::omp::trace_sums(r.entries());
    if (!(sums.trace_squared > 0.0))
        throw UndefinedMetricError("edof_exact: correlation matrix is zero");
    return {sums.trace * sums.trace / sums.trace_squared, sums.trace, sums.trace_squared, EdofMethod::exact_trace};
}

EdofResult edof_closed_form(const ArrayConfig &tx, const ArrayConfig &rx, const Scenario &s, Exec exec)
{
    validate(s);
    if (tx.frequency_hz() != rx.frequency_hz() || tx.spacing_m() != rx.spacing_m())
        throw InvalidScenarioError("edof_closed_form: Tx and Rx must share carrier and spacing");

    const auto mode = s.indexing_mode;
    const kernels::ClosedFormInputs in{
        tx.count_h(),
        tx.count_v(),
        rx.count_h(),
        rx.count_v(),
        index_offset(tx.count_h(), mode),
        index_offset(tx.count_v(), mode),
        index_offset(rx.count_h(), mode),
        index_offset(rx.count_v(), mode),
        tx.spacing_m(),
        2.0 * std::numbers::pi / tx.wavelength_m(),
        s.rx_center,
    };
    const auto sums = exec == Exec::serial ? kernels::serial::closed_form_sums(in)
                                           : kernels::omp::closed_form_sums(in);

    const double x_r = s.rx_center.x;
    const double x4 = x_r * x_r * x_r * x_r;
    const double beta = x4 * sums.inverse_q_sum * sums.inverse_q_sum / sums.coherent_power;

    // Report the equivalent traces of R under the same approximation.
    constexpr double four_pi_sq = 16.0 * std::numbers::pi * std::numbers::pi;
    const double trace = sums.inverse_q_sum / four_pi_sq;
    const double trace_sq = sums.coherent_power / (four_pi_sq * four_pi_sq * x4);
    return {beta, trace, trace_sq, EdofMethod::closed_form};
}

Eigen::VectorXd eigenvalues(const CorrelationMatrix &r)
{
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(r.entries(), Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

Eigen::VectorXd gram_eigenvalues(const ChannelMatrix &h)
{
    const CMatrix &e = h.entries();
    CMatrix g = e.rows() < e.cols() ? CMatrix(e * e.adjoint()) : CMatrix(e.adjoint() * e);
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(g, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

EdofResult edof_eigen(const Eigen::VectorXd &spectrum)
{
    const double s1 = spectrum.sum();
    const double s2 = spectrum.squaredNorm();
    if (!(s2 > 0.0))
        throw UndefinedMetricError("edof_eigen: zero spectrum");
    return {s1 * s1 / s2, s1, s2, EdofMethod::eigen};
}

std::size_t rank_from_spectrum(const Eigen::VectorXd &spectrum, double rel_threshold)
{
    const double lmax = spectrum.size() > 0 ? spectrum.maxCoeff() : 0.0;
    if (!(lmax > 0.0))
        throw UndefinedMetricError("eigen_rank: correlation matrix is zero");
    const double cut = rel_threshold * lmax;
    return std::size_t(std::count_if(spectrum.begin(), spectrum.end(), [cut](double l) { return l > cut; }));
}

std::size_t eigen_rank(const CorrelationMatrix &r, double rel_threshold)
{
    return rank_from_spectrum(eigenvalues(r), rel_threshold);
}

CapacityResult capacity_edof(const EdofResult &edof, std::size_t rank_r, double snr_db)
{
    if (rank_r < 1)
        throw InvalidScenarioError("capacity_edof: rank must be >= 1");
    if (!(edof.beta >= 1.0 - 1e-9) || !std::isfinite(edof.beta))
        throw InvalidScenarioError("capacity_edof: EDoF must be >= 1");
    if (!std::isfinite(snr_db))
        throw InvalidScenarioError("capacity_edof: SNR must be finite");
    const double c = edof.beta * std::log2(1.0 + db_to_linear(snr_db) / double(rank_r));
    return {c, edof, rank_r, snr_db};
}

CapacityResult capacity_closed_form(const ArrayConfig &tx, const ArrayConfig &rx, const Scenario &s,
                                    std::size_t rank_r, Exec exec)
{
    return capacity_edof(edof_closed_form(tx, rx, s, exec), rank_r, s.snr_db);
}

double capacity_from_spectrum(const Eigen::VectorXd &spectrum, Eigen::Index tx_count, double snr_db)
{
    const double per_element = db_to_linear(snr_db) / double(tx_count);
    double c = 0.0;
    for (double l : spectrum)
        c += std::log2(1.0 + per_element * std::max(l, 0.0));
    return c;
}

double capacity_eigen_oracle(const ChannelMatrix &h, double snr_db)
{
    if (h.entries().cwiseAbs2().sum() == 0.0)
        throw UndefinedMetricError("capacity_eigen_oracle: zero channel");
    return capacity_from_spectrum(gram_eigenvalues(h), h.tx_count(), snr_db);
}

} // namespace nearfield
