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

#include "oracles.hpp"

#include "c2link/channel.hpp"
#include "c2link/mathfun.hpp"
#include "c2link/rng.hpp"

#include <doctest.h>

#include <cmath>

using namespace c2link;

TEST_SUITE("channel")
{
    TEST_CASE("LoS probability")
    {
        const Environment env;
        CHECK(p_los(50.0, 25.0, 300.0, env) == 1.0);
        const double expected = 1.0 - std::exp(-162.5 * 162.5 / 800.0);
        CHECK(p_los(150.0, 25.0, 300.0, env) == doctest::Approx(expected).epsilon(1e-15));
        CHECK(1.0 - p_los(150.0, 25.0, 300.0, env) > 0.0);
        const double far = p_los(5000.0, 25.0, 300.0, env);
        CHECK(far >= 0.0);
        CHECK(far <= p_los(150.0, 25.0, 300.0, env));
        CHECK_THROWS(p_los(100.0, 300.0, 300.0, env));
        CHECK_THROWS(p_los(-1.0, 25.0, 300.0, env));
    }

    TEST_CASE("LoS probability stays in range")
    {
        const Environment env;
        for (double r = 0.0; r <= 20000.0; r += 37.0)
            for (double h : {30.0, 100.0, 300.0, 1000.0}) {
                const double p = p_los(r, 25.0, h, env);
                CHECK(p >= 0.0);
                CHECK(p <= 1.0);
                if (std::floor(r * std::sqrt(env.q1 * env.q2) / 1000.0 - 1.0) < 0)
                    CHECK(p == 1.0);
            }
    }

    TEST_CASE("G2A path losses")
    {
        CHECK(std::abs(pl_g2a_los_db(300.0, 2.0) - 88.52) < 0.01);
        // -17.5 + (46 - 7 log10 300) log10 300 + 20 log10(80 pi / 3)
        const double l300 = std::log10(300.0);
        const double nlos = -17.5 + (46.0 - 7.0 * l300) * l300 + 20.0 * std::log10(80.0 * M_PI / 3.0);
        CHECK(std::abs(nlos - 91.957) < 1e-3);
        CHECK(pl_g2a_nlos_db(300.0, 300.0, 2.0) == doctest::Approx(nlos).epsilon(1e-12));
        CHECK(pl_g2a_los_db(600.0, 2.0) - pl_g2a_los_db(300.0, 2.0) == doctest::Approx(22.0 * std::log10(2.0)));
    }

    TEST_CASE("averaged G2A path loss")
    {
        Environment env;
        const double d50 = std::hypot(50.0, 275.0);
        CHECK(pl_avg_g2a_db(50.0, 25.0, 300.0, 2.0, env) == pl_g2a_los_db(d50, 2.0));
        CHECK(pl_avg_g2a_db(150.0, 25.0, 300.0, 2.0, env) == doctest::Approx(pl_g2a_los_db(313.25, 2.0)).epsilon(1e-4));

        for (auto mix : {PathLossMixture::Decibel, PathLossMixture::Linear}) {
            env.mixture = mix;
            for (double r = 0.0; r < 10000.0; r += 97.0) {
                const double d = std::hypot(r, 275.0);
                const double lo = std::min(pl_g2a_los_db(d, 2.0), pl_g2a_nlos_db(d, 300.0, 2.0));
                const double hi = std::max(pl_g2a_los_db(d, 2.0), pl_g2a_nlos_db(d, 300.0, 2.0));
                const double v = pl_avg_g2a_db(r, 25.0, 300.0, 2.0, env);
                CHECK(v >= lo - 1e-9);
                CHECK(v <= hi + 1e-9);
            }
        }
    }

    TEST_CASE("free-space and G2H path loss")
    {
        CHECK(std::abs(fspl_db(1000.0, 2.0) - 98.47) < 0.01);
        CHECK(std::abs(fspl_db(20615.5, 2.0) - 124.74) < 0.02);
        CHECK(fspl_db(10000.0, 2.0) - fspl_db(1000.0, 2.0) == doctest::Approx(20.0));

        Environment env;
        env.sf_sigma_los_db = 0.0;
        Rng rng(RngStream{1, 1});
        CHECK(pl_g2h_db(20615.5, 2.0, 75.96, env, rng) == doctest::Approx(fspl_db(20615.5, 2.0)));

        env.clutter_loss_db = {1, 2, 3, 4, 5, 6, 7, 8, 9};
        CHECK(clutter_loss_db(75.96, env) == 8.0);
        CHECK(clutter_loss_db(90.0, env) == 9.0);
        CHECK(clutter_loss_db(0.0, env) == 1.0);
        CHECK(elevation_bin(75.96) == 7);

        env.sf_sigma_los_db = 4.0;
        double s = 0.0;
        const int n = 100000;
        for (int i = 0; i < n; ++i)
            s += pl_g2h_db(20615.5, 2.0, 75.96, env, rng);
        CHECK(std::abs(s / n - (fspl_db(20615.5, 2.0) + 8.0)) < 0.05);
    }

    TEST_CASE("ULA gain")
    {
        const UlaAntenna ula{8, db_to_linear(8.0), 102.0};
        CHECK(std::abs(ula_array_factor(102.0, 8, 102.0) - 8.0) < 1e-9);
        CHECK(std::abs(ula_gain(102.0, ula) - 48.3) < 0.1);
        CHECK(ula_gain(0.0, ula) == doctest::Approx(0.0).epsilon(1e-30));

        for (int n : {2, 4, 8, 16}) {
            const double c = std::cos(102.0 * M_PI / 180.0) + 2.0 / n;
            if (c > 1.0)
                continue;
            const double phi = std::acos(c) * 180.0 / M_PI;
            CHECK(ula_array_factor(phi, n, 102.0) <= 1e-20 * n);
        }

        // continuity across the removable singularity
        const double at = ula_gain(102.0, ula);
        for (double h : {1e-7, 1e-6, 1e-5}) {
            CHECK(std::abs(ula_gain(102.0 + h, ula) - at) / at < 1e-6);
            CHECK(std::abs(ula_gain(102.0 - h, ula) - at) / at < 1e-6);
        }
    }

    TEST_CASE("reflector pattern")
    {
        CHECK(hap_pattern(0.0) == 1.0);
        CHECK(std::abs(hap_pattern(1e-6) - 1.0) < 1e-9);
        const double theta_null = std::asin(3.8317059702075123 / (20.0 * M_PI)) * 180.0 / M_PI;
        CHECK(std::abs(theta_null - 3.497) < 0.01);
        CHECK(hap_pattern(theta_null) < 1e-20);
        for (double t = 0.01; t <= 90.0; t += 0.01)
            CHECK(hap_pattern(t) < 1.0);
        const ReflectorAntenna r;
        CHECK(hap_gain(0.0, r) == doctest::Approx(r.max_gain));
        // against the J1 series oracle
        for (double t = 0.1; t < 30.0; t += 0.3) {
            const double u = 20.0 * M_PI * std::sin(t * M_PI / 180.0);
            const double ref = 4.0 * std::pow(oracle::bessel_j1(u) / u, 2);
            CHECK(std::abs(hap_pattern(t) - ref) < 1e-12);
        }
    }

    TEST_CASE("antenna variant dispatch")
    {
        CHECK(antenna_gain(OmniAntenna{}, 37.0) == 1.0);
        CHECK(antenna_gain(UlaAntenna{}, 102.0) == doctest::Approx(ula_gain(102.0, UlaAntenna{})));
        CHECK(antenna_gain(ReflectorAntenna{}, 0.0) == doctest::Approx(ReflectorAntenna{}.max_gain));
    }

    TEST_CASE("Rician K by elevation")
    {
        const RiceTable t;
        CHECK(rice_k_db(LinkKind::G2A, 5.0, t) == 5.0);
        CHECK(rice_k_db(LinkKind::G2A, 85.0, t) == 12.0);
        CHECK(rice_k_db(LinkKind::G2A, 90.0, t) == 12.0);
        for (double e = 0.0; e <= 90.0; e += 3.0)
            CHECK(rice_k_db(LinkKind::A2A, e, t) == 12.0);
        CHECK(rice_k_db(LinkKind::G2H, 45.0, t) == doctest::Approx(5.0 + 10.0 * 4.0 / 8.0));
        double prev = -1e9;
        for (double e = 0.0; e <= 90.0; e += 1.0) {
            const double k = rice_k_db(LinkKind::H2A, e, t);
            CHECK(k >= prev);
            prev = k;
        }
    }

    TEST_CASE("channel power samples")
    {
        Rng rng(RngStream{5, 5});
        CHECK(channel_power_sample(0.0, 1.0, 1.0, 200.0, rng) == doctest::Approx(1.0).epsilon(1e-6));

        const int n = 1000000;
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            s += channel_power_sample(10.0, 2.0, 3.0, 12.0, rng);
        CHECK(std::abs(s / n - 0.6) < 0.006);

        s = 0.0;
        for (int i = 0; i < n; ++i)
            s += channel_power_sample(88.52, 48.3, 1.0, 12.0, rng);
        const double target = 48.3 * std::pow(10.0, -8.852);
        CHECK(std::abs(s / n - target) < 0.01 * target);

        for (double k : {-10.0, 0.0, 5.0, 15.0}) {
            s = 0.0;
            for (int i = 0; i < 200000; ++i)
                s += channel_power_sample(3.0, 1.0, 1.0, k, rng);
            CHECK(std::abs(s / 200000 - std::pow(10.0, -0.3)) < 0.01);
        }
    }
}
