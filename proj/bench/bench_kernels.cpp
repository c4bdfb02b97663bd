// SPDX-License-Identifier: Apache-2.0
//
// c2link: URLLC multi-connectivity link simulator for aerial vehicles
// Copyright (C) 2026 The c2link authors
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

// Serial reference vs OpenMP kernels on one busy G2A-like link.

#include "c2link/conditional.hpp"
#include "c2link/kernels.hpp"
#include "c2link/link.hpp"

#include <benchmark/benchmark.h>

using namespace c2link;

namespace {

LinkModel busy_link()
{
    LinkModel l;
    l.desired = ChannelTerm{1.0, 0.0, 1.0, 1.0, 7.0, 2.0};
    for (int i = 0; i < 6; ++i)
        l.interference.sources.push_back(ChannelTerm{1.0, 4.0 + i, 1.0, 1.0, 3.0 + i, 1.0});
    l.interference.p_interf = 0.01;
    l.radio = RadioParams{0.4e6, 1.0 / (0.4e6 * 40.0), 0.0};
    return l;
}

const kernels::FblSetting kFbl{0.4e6, 0.64e-3, 256.0};

void BM_sample_sinr_serial(benchmark::State& st)
{
    const auto l = busy_link();
    for (auto _ : st)
        benchmark::DoNotOptimize(kernels::serial::sample_sinr(l, st.range(0), RngStream{1, 2}));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_sample_sinr_omp(benchmark::State& st)
{
    const auto l = busy_link();
    for (auto _ : st)
        benchmark::DoNotOptimize(kernels::sample_sinr(l, st.range(0), RngStream{1, 2}));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_mean_fbl_error_serial(benchmark::State& st)
{
    const auto s = kernels::serial::sample_sinr(busy_link(), st.range(0), RngStream{1, 3});
    for (auto _ : st)
        benchmark::DoNotOptimize(kernels::serial::mean_fbl_error(s, kFbl));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_mean_fbl_error_omp(benchmark::State& st)
{
    const auto s = kernels::serial::sample_sinr(busy_link(), st.range(0), RngStream{1, 3});
    for (auto _ : st)
        benchmark::DoNotOptimize(kernels::mean_fbl_error(s, kFbl));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_mean_conditional_serial(benchmark::State& st)
{
    const auto x = kernels::serial::sample_impairment(busy_link(), st.range(0), RngStream{1, 4});
    const ConditionalErrorTable t(7.0, kFbl.bandwidth_hz, kFbl.d_t_s, kFbl.bits);
    for (auto _ : st)
        benchmark::DoNotOptimize(kernels::serial::mean_conditional_error(x, t));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_mean_conditional_omp(benchmark::State& st)
{
    const auto x = kernels::serial::sample_impairment(busy_link(), st.range(0), RngStream{1, 4});
    const ConditionalErrorTable t(7.0, kFbl.bandwidth_hz, kFbl.d_t_s, kFbl.bits);
    for (auto _ : st)
        benchmark::DoNotOptimize(kernels::mean_conditional_error(x, t));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

} // namespace

BENCHMARK(BM_sample_sinr_serial)->Arg(1 << 17)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sample_sinr_omp)->Arg(1 << 17)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mean_fbl_error_serial)->Arg(1 << 17)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mean_fbl_error_omp)->Arg(1 << 17)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mean_conditional_serial)->Arg(1 << 17)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mean_conditional_omp)->Arg(1 << 17)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
