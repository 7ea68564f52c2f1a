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

#include "kernel_rows.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace nearfield::kernels::omp
{

int max_threads() noexcept
{
#if defined(_OPENMP)
    return omp_get_max_threads();
#else
    return 1;
#endif
}

CMatrix channel(const ChannelInputs &in)
{
    CMatrix h(Eigen::Index(in.rx.size()), Eigen::Index(in.tx.size()));
    const std::ptrdiff_t n_tx = std::ptrdiff_t(in.tx.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t n = 0; n < n_tx; ++n)
        detail::channel_column(in, std::size_t(n), h);
    return h;
}

CMatrix gram(const CMatrix &h)
{
    CMatrix r(h.cols(), h.cols());
    const Eigen::Index n = h.cols();
    // Row a owns entries (a, b>=a) and their mirrors, so rows never collide.
#pragma omp parallel for schedule(dynamic, 8)
    for (Eigen::Index a = 0; a < n; ++a)
        detail::gram_row(h, a, r);
    return r;
}

TraceSums trace_sums(const CMatrix &r)
{
    std::vector<double> rows(static_cast<std::size_t>(r.rows()));
    const Eigen::Index n = r.rows();
#pragma omp parallel for schedule(static)
    for (Eigen::Index a = 0; a < n; ++a)
        rows[std::size_t(a)] = detail::power_row(r, a);
    return detail::reduce_trace(r, rows);
}

ClosedFormSums closed_form_sums(const ClosedFormInputs &in)
{
    const std::ptrdiff_t n_tx = std::ptrdiff_t(in.tx_h * in.tx_v);
    std::vector<double> inv_q(static_cast<std::size_t>(n_tx)), coherent(static_cast<std::size_t>(n_tx));
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t n = 0; n < n_tx; ++n)
    {
        inv_q[std::size_t(n)] = detail::inverse_q_row(in, std::size_t(n));
        coherent[std::size_t(n)] = detail::coherent_row(in, std::size_t(n));
    }
    return detail::reduce_closed_form(inv_q, coherent);
}

} // namespace nearfield::kernels::omp
