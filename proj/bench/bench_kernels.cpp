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

// Serial reference vs OpenMP kernels on the default geometry and a larger one.
//
//   ./nearfield_bench --benchmark_filter=Closed
//   OMP_NUM_THREADS=8 ./nearfield_bench

#include "nearfield/channel.hpp"
#include "nearfield/metrics.hpp"

#include <benchmark/benchmark.h>

using namespace nearfield;

namespace
{

struct Setup
{
    ArrayConfig tx;
    ArrayConfig rx;
    Scenario scenario;
};

Setup setup(int which)
{
    Scenario s;
    s.rx_center = {1.0, 0.0, 0.0};
    if (which == 0)
        return {ArrayConfig(64, 2, 13e9), ArrayConfig(4, 2, 13e9), s}; // 128 x 8
    return {ArrayConfig(256, 2, 13e9), ArrayConfig(32, 2, 13e9), s};   // 512 x 64
}

template <Exec E>
void BM_Channel(benchmark::State &state)
{
    const auto c = setup(int(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(build_channel_matrix(c.tx, c.rx, c.scenario, E));
}

template <Exec E>
void BM_Gram(benchmark::State &state)
{
    const auto c = setup(int(state.range(0)));
    const auto h = build_channel_matrix(c.tx, c.rx, c.scenario);
    for (auto _ : state)
        benchmark::DoNotOptimize(correlation_matrix(h, E));
}

template <Exec E>
void BM_EdofExact(benchmark::State &state)
{
    const auto c = setup(int(state.range(0)));
    const auto r = correlation_matrix(build_channel_matrix(c.tx, c.rx, c.scenario));
    for (auto _ : state)
        benchmark::DoNotOptimize(edof_exact(r, E));
}

template <Exec E>
void BM_ClosedForm(benchmark::State &state)
{
    const auto c = setup(int(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(edof_closed_form(c.tx, c.rx, c.scenario, E));
}

} // namespace

BENCHMARK(BM_Channel<Exec::serial>)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Channel<Exec::parallel>)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Gram<Exec::serial>)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Gram<Exec::parallel>)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_EdofExact<Exec::serial>)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_EdofExact<Exec::parallel>)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ClosedForm<Exec::serial>)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClosedForm<Exec::parallel>)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
