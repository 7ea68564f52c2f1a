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

namespace nearfield::kernels::serial
{

CMatrix channel(const ChannelInputs &in)
{
    CMatrix h(Eigen::Index(in.rx.size()), Eigen::Index(in.tx.size()));
    for (std::size_t n = 0; n < in.tx.size(); ++n)
        detail::channel_column(in, n, h);
    return h;
}

CMatrix gram(const CMatrix &h)
{
    CMatrix r(h.cols(), h.cols());
    for (Eigen::Index a = 0; a < h.cols(); ++a)
        detail::gram_row(h, a, r);
    return r;
}

TraceSums trace_sums(const CMatrix &r)
{
    std::vector<double> rows(static_cast<std::size_t>(r.rows()));
    for (Eigen::Index a = 0; a < r.rows(); ++a)
        rows[std::size_t(a)] = detail::power_row(r, a);
    return detail::reduce_trace(r, rows);
}

ClosedFormSums closed_form_sums(const ClosedFormInputs &in)
{
    const std::size_t n_tx = in.tx_h * in.tx_v;
    std::vector<double> inv_q(n_tx), coherent(n_tx);
    for (std::size_t n = 0; n < n_tx; ++n)
    {
        inv_q[n] = detail::inverse_q_row(in, n);
        coherent[n] = detail::coherent_row(in, n);
    }
    return detail::reduce_closed_form(inv_q, coherent);
}

} // namespace nearfield::kernels::serial
