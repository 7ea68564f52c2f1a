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

#include <catch2/catch_amalgamated.hpp>

#include "nearfield/errors.hpp"
#include "nearfield/metrics.hpp"
#include "oracle.hpp"

#include <cmath>

using namespace nearfield;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{

Scenario at(double x_r, DistanceMode mode = DistanceMode::exact)
{
    Scenario s;
    s.rx_center = {x_r, 0.0, 0.0};
    s.distance_mode = mode;
    return s;
}

CorrelationMatrix wrap(const CMatrix &m)
{
    return CorrelationMatrix(m);
}

const double kSiso70 = 23.25349680848103; // log2(1 + 1e7)

} // namespace

TEST_CASE("edof_exact - textbook spectra")
{
    CHECK_THAT(edof_exact(wrap(CMatrix::Identity(5, 5))).beta, WithinRel(5.0, 1e-15));

    CVector u(3);
    u << std::complex<double>(1, 2), std::complex<double>(-0.5, 0.1), std::complex<double>(0.3, -0.7);
    CHECK_THAT(edof_exact(wrap(u * u.adjoint())).beta, WithinRel(1.0, 1e-14));

    CMatrix d = CMatrix::Zero(2, 2);
    d(0, 0) = 2.0;
    d(1, 1) = 1.0;
    const auto res = edof_exact(wrap(d));
    CHECK_THAT(res.beta, WithinRel(1.8, 1e-15));
    CHECK(res.trace_r == 3.0);
    CHECK(res.trace_r_squared == 5.0);
    CHECK(res.method == EdofMethod::exact_trace);

    CHECK_THROWS_AS(edof_exact(wrap(CMatrix::Zero(3, 3))), UndefinedMetricError);
}

TEST_CASE("edof_exact - default geometry agrees with eigen oracle")
{
    const ArrayConfig tx(64, 2, 13e9), rx(4, 2, 13e9);
    const auto r = correlation_matrix(build_channel_matrix(tx, rx, at(1.0)));
    const auto exact = edof_exact(r);
    const double oracle_beta = oracle::beta_eigen(oracle::gram(oracle::channel({})));
    CHECK_THAT(exact.beta, WithinRel(oracle_beta, 1e-9));
    CHECK_THAT(exact.beta, WithinRel(1.7086288198726205, 1e-9)); // independent numpy evaluation
    CHECK_THAT(exact.beta, WithinRel(exact.trace_r * exact.trace_r / exact.trace_r_squared, 1e-12));
    CHECK_THAT(edof_eigen(eigenvalues(r)).beta, WithinRel(exact.beta, 1e-9));
}

TEST_CASE("edof_exact - scale invariance")
{
    const auto r = correlation_matrix(build_channel_matrix(ArrayConfig(6, 2, 9e9), ArrayConfig(2, 2, 9e9), at(0.9)));
    const double base = edof_exact(r).beta;
    for (double c : {1e-8, 0.37, 1.0, 42.0, 1e9})
        CHECK_THAT(edof_exact(wrap(c * r.entries())).beta, WithinRel(base, 1e-12));
}

TEST_CASE("edof_closed_form - single pair")
{
    const ArrayConfig one(1, 1, 13e9);
    for (double x : {0.3, 1.0, 17.0})
    {
        const auto res = edof_closed_form(one, one, at(x));
        CHECK_THAT(res.beta, WithinRel(1.0, 1e-14));
        CHECK(res.method == EdofMethod::closed_form);
    }
}

TEST_CASE("edof_closed_form - matches the direct quadruple sum")
{
    for (bool centered : {false, true})
    {
        oracle::Geometry g{.nh = 6, .nv = 2, .mh = 3, .mv = 2, .freq = 13e9, .xr = 0.7, .yr = 0.02, .zr = -0.01};
        g.centered = centered;
        Scenario s;
        s.rx_center = {g.xr, g.yr, g.zr};
        s.indexing_mode = centered ? IndexingMode::centered : IndexingMode::literal;
        const auto res = edof_closed_form(ArrayConfig(6, 2, 13e9), ArrayConfig(3, 2, 13e9), s);
        CHECK_THAT(res.beta, WithinRel(oracle::beta_closed_form(g), 1e-12));
        CHECK_THAT(res.beta, WithinRel(res.trace_r * res.trace_r / res.trace_r_squared, 1e-12));
    }

    // Independent numpy evaluation of the default geometry at 1 m.
    const auto paper = edof_closed_form(ArrayConfig(64, 2, 13e9), ArrayConfig(4, 2, 13e9), at(1.0));
    CHECK_THAT(paper.beta, WithinRel(1.4900517683715586, 1e-10));
}

TEST_CASE("edof_closed_form - coherent diagonal terms equal M^2")
{
    // One Tx element: the denominator is the single n1 = n2 term, M^2, so
    // beta = x_R^4 (sum_m 1/q)^2 / M^2 exactly.
    const ArrayConfig tx(1, 1, 13e9), rx(4, 2, 13e9);
    const Scenario s = at(2.0);
    const auto res = edof_closed_form(tx, rx, s);
    const auto t = tx_positions(tx, s.indexing_mode);
    const auto r = rx_positions(rx, s);
    double inv_q = 0;
    for (const auto &p : r)
        inv_q += 1.0 / std::pow(distance_exact(t[0], p), 2);
    CHECK_THAT(res.beta, WithinRel(std::pow(2.0, 4) * inv_q * inv_q / 64.0, 1e-12));
}

TEST_CASE("edof_closed_form - converges to the Fresnel exact EDoF with distance")
{
    const ArrayConfig tx(64, 2, 13e9), rx(4, 2, 13e9);
    double previous = 1e300;
    for (double x : {1.0, 2.0, 4.0, 8.0, 16.0, 32.0})
    {
        const double exact = edof_exact(correlation_matrix(build_channel_matrix(tx, rx, at(x, DistanceMode::fresnel)))).beta;
        const double closed = edof_closed_form(tx, rx, at(x)).beta;
        const double dev = std::abs(closed - exact) / exact;
        CHECK(dev < previous);
        previous = dev;
    }
    CHECK(previous < 1e-3);
}

TEST_CASE("edof_closed_form - rejects x_R <= 0 and mismatched arrays")
{
    const ArrayConfig a(2, 2, 13e9);
    CHECK_THROWS_AS(edof_closed_form(a, a, at(0.0)), InvalidScenarioError);
    CHECK_THROWS_AS(edof_closed_form(a, ArrayConfig(2, 2, 13e9, 0.5), at(1.0)), InvalidScenarioError);
}

TEST_CASE("eigen_rank")
{
    CHECK(eigen_rank(wrap(CMatrix::Identity(7, 7))) == 7);
    CVector u = CVector::LinSpaced(4, 1.0, 4.0);
    CHECK(eigen_rank(wrap(u * u.adjoint())) == 1);
    CHECK_THROWS_AS(eigen_rank(wrap(CMatrix::Zero(2, 2))), UndefinedMetricError);

    const auto r = correlation_matrix(build_channel_matrix(ArrayConfig(64, 2, 13e9), ArrayConfig(4, 2, 13e9), at(1.0)));
    const auto rank = eigen_rank(r);
    CHECK(rank == 8);
    CHECK(edof_exact(r).beta <= double(rank));

    CMatrix d = CMatrix::Zero(3, 3);
    d(0, 0) = 1.0;
    d(1, 1) = 1e-6;
    d(2, 2) = 1e-14;
    CHECK(eigen_rank(wrap(d)) == 2);
    CHECK(eigen_rank(wrap(d), 1e-3) == 1);
}

TEST_CASE("capacity_edof")
{
    CHECK_THAT(capacity_edof(EdofResult::from_beta(1.0), 1, 70.0).capacity_bps_hz, WithinAbs(kSiso70, 1e-9));
    CHECK_THAT(capacity_edof(EdofResult::from_beta(2.0), 4, 70.0).capacity_bps_hz,
               WithinRel(42.506994482578875, 1e-12));
    for (std::size_t k : {1u, 2u, 5u, 8u})
    {
        const double snr = 1e3;
        CHECK_THAT(capacity_edof(EdofResult::from_beta(double(k)), k, 30.0).capacity_bps_hz,
                   WithinRel(double(k) * std::log2(1.0 + snr / double(k)), 1e-12));
    }
    const auto c = capacity_edof(EdofResult::from_beta(1.5), 3, 20.0);
    CHECK(c.rank_r == 3);
    CHECK(c.snr_db == 20.0);
    CHECK(c.edof.beta == 1.5);

    CHECK_THROWS_AS(capacity_edof(EdofResult::from_beta(0.5), 1, 70.0), InvalidScenarioError);
    CHECK_THROWS_AS(capacity_edof(EdofResult::from_beta(1.0), 0, 70.0), InvalidScenarioError);
}

TEST_CASE("capacity_closed_form - composition")
{
    const ArrayConfig one(1, 1, 13e9);
    Scenario s = at(1.0);
    CHECK_THAT(capacity_closed_form(one, one, s, 1).capacity_bps_hz, WithinAbs(kSiso70, 1e-9));

    const ArrayConfig tx(64, 2, 13e9), rx(4, 2, 13e9);
    for (std::size_t r : {1u, 7u, 8u})
    {
        const auto cap = capacity_closed_form(tx, rx, s, r);
        const auto edof = edof_closed_form(tx, rx, s);
        // Same floating-point path, so equality is exact.
        CHECK(cap.capacity_bps_hz == capacity_edof(edof, r, s.snr_db).capacity_bps_hz);
        CHECK(cap.capacity_bps_hz / edof.beta == Catch::Approx(std::log2(1.0 + 1e7 / double(r))).epsilon(1e-15));
    }

    double previous = 1e300;
    for (int x = 1; x <= 10; ++x)
    {
        const double c = capacity_closed_form(tx, rx, at(double(x)), 8).capacity_bps_hz;
        CHECK(c < previous);
        previous = c;
    }
}

TEST_CASE("capacity_eigen_oracle")
{
    CMatrix one(1, 1);
    one(0, 0) = 1.0;
    CHECK_THAT(capacity_eigen_oracle(ChannelMatrix(one), 70.0), WithinAbs(kSiso70, 1e-9));

    // Orthogonal columns of equal norm: all N eigenvalues equal the squared column norm.
    CMatrix q = CMatrix::Zero(4, 3);
    q(0, 0) = 2.0;
    q(1, 1) = std::complex<double>(0.0, 2.0);
    q(2, 2) = std::complex<double>(std::sqrt(2.0), std::sqrt(2.0));
    const double snr = 1e4;
    CHECK_THAT(capacity_eigen_oracle(ChannelMatrix(q), 40.0), WithinRel(3.0 * std::log2(1.0 + snr / 3.0 * 4.0), 1e-12));

    CHECK_THROWS_AS(capacity_eigen_oracle(ChannelMatrix(CMatrix::Zero(2, 2)), 70.0), UndefinedMetricError);

    // Default geometry at 1 m; independent numpy eigendecomposition.
    const auto h = build_channel_matrix(ArrayConfig(64, 2, 13e9), ArrayConfig(4, 2, 13e9), at(1.0));
    CHECK_THAT(capacity_eigen_oracle(h, 70.0), WithinRel(63.2810251011493, 1e-9));
}
