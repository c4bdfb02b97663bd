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

#include "c2link/conditional.hpp"
#include "c2link/kernels.hpp"
#include "c2link/link.hpp"

#include <doctest.h>
#include <omp.h>

#include <cmath>
#include <cstring>

using namespace c2link;
using kernels::FblSetting;

namespace {

LinkModel busy_link()
{
    LinkModel l;
    l.desired = ChannelTerm{1.0, 0.0, 1.0, 1.0, 7.0, 2.0};
    for (int i = 0; i < 5; ++i)
        l.interference.sources.push_back(ChannelTerm{1.0, 4.0 + i, 1.0, 1.0, 3.0 + i, 1.0});
    l.interference.p_interf = 0.25;
    l.interference.mode = InterferenceMode::Bernoulli;
    l.radio = RadioParams{0.4e6, 1.0 / (0.4e6 * 40.0), 0.0};
    return l;
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

struct ThreadGuard {
    int saved = omp_get_max_threads();
    ~ThreadGuard() { omp_set_num_threads(saved); }
};

} // namespace

TEST_SUITE("kernels")
{
    TEST_CASE("chunking")
    {
        CHECK(kernels::detail::chunk_count(0) == 0);
        CHECK(kernels::detail::chunk_count(1) == 1);
        CHECK(kernels::detail::chunk_count(kernels::kChunk) == 1);
        CHECK(kernels::detail::chunk_count(kernels::kChunk + 1) == 2);
    }

    TEST_CASE("parallel kernels reproduce the serial reference at any thread count")
    {
        ThreadGuard guard;
        const auto l = busy_link();
        const RngStream s{123, 456};
        const std::int64_t n = 3 * kernels::kChunk + 517; // ragged tail
        const auto ref_sinr = kernels::serial::sample_sinr(l, n, s);
        const auto ref_imp = kernels::serial::sample_impairment(l, n, s);
        const FblSetting fs{0.4e6, 0.64e-3, 256.0};
        const ConditionalErrorTable table(7.0, 0.4e6, 0.64e-3, 256.0);
        const auto ref_mean = kernels::serial::mean_fbl_error(ref_sinr, fs);
        const auto ref_cond = kernels::serial::mean_conditional_error(ref_imp, table);

        for (int threads : {1, 2, 3, 4, 8}) {
            omp_set_num_threads(threads);
            CAPTURE(threads);
            const auto sinr = kernels::sample_sinr(l, n, s);
            const auto imp = kernels::sample_impairment(l, n, s);
            CHECK(sinr == ref_sinr);
            CHECK(imp == ref_imp);
            const auto m = kernels::mean_fbl_error(sinr, fs);
            const auto c = kernels::mean_conditional_error(imp, table);
            CHECK(same_bits(m.mean, ref_mean.mean));
            CHECK(same_bits(m.complement, ref_mean.complement));
            CHECK(same_bits(m.std_error, ref_mean.std_error));
            CHECK(same_bits(c.mean, ref_cond.mean));
            CHECK(same_bits(c.std_error, ref_cond.std_error));
            CHECK(m.n == n);
        }
    }

    TEST_CASE("sample streams are prefixes of each other")
    {
        const auto l = busy_link();
        const RngStream s{9, 9};
        const auto a = kernels::sample_sinr(l, 10000, s);
        const auto b = kernels::sample_sinr(l, 20000, s);
        for (std::size_t i = 0; i < a.size(); ++i)
            CHECK(a[i] == b[i]);
    }

    TEST_CASE("mean estimate arithmetic")
    {
        const std::vector<double> sinr{1.0, 3.0, 7.0, 15.0, 31.0};
        const FblSetting fs{0.4e6, 0.64e-3, 256.0};
        double s = 0.0, s2 = 0.0;
        for (double g : sinr) {
            const double e = fbl_error(g, fs.bandwidth_hz, fs.d_t_s, fs.bits);
            s += e;
            s2 += e * e;
        }
        const double n = 5.0;
        const double mean = s / n;
        const double var = (s2 / n - mean * mean) * n / (n - 1.0);
        const auto m = kernels::mean_fbl_error(sinr, fs);
        CHECK(m.mean == doctest::Approx(mean).epsilon(1e-12));
        CHECK(m.complement == doctest::Approx(1.0 - mean).epsilon(1e-12));
        CHECK(m.std_error == doctest::Approx(std::sqrt(var / n)).epsilon(1e-9));
    }

    TEST_CASE("kernel errors propagate out of parallel regions")
    {
        const std::vector<double> bad{1.0, -1.0, 2.0};
        CHECK_THROWS(kernels::mean_fbl_error(bad, FblSetting{0.4e6, 0.0, 256.0}));
        CHECK_THROWS(kernels::serial::mean_fbl_error(bad, FblSetting{0.4e6, 0.0, 256.0}));
    }
}
