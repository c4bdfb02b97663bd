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

#include "c2link/config.hpp"

#include <doctest.h>

#include <algorithm>
#include <string>

using namespace c2link;

namespace {

std::string error_key(const std::string& text)
{
    try {
        (void)parse_config(text);
    } catch (const ConfigError& e) {
        return e.key();
    }
    return "<no error>";
}

} // namespace

TEST_SUITE("config")
{
    TEST_CASE("empty text gives the defaults")
    {
        const auto c = parse_config("");
        const ScenarioConfig d;
        CHECK(dump_config(c) == dump_config(d));
        CHECK(c.p_interf == 0.01);
        CHECK(c.packet_loss_target == 1e-5);
        CHECK(c.delay_threshold_ms == 10.0);
        CHECK(c.packet_size_bits == 256.0);
        CHECK(c.sweep_rates_kbps.size() == 21);
        CHECK(c.sweep_rates_kbps.front() == doctest::Approx(10.0));
        CHECK(c.sweep_rates_kbps.back() == doctest::Approx(1000.0));
        CHECK_NOTHROW(d.validate());
    }

    TEST_CASE("range checks name the key")
    {
        CHECK(error_key("p_interf = 1.5\n") == "p_interf");
        CHECK(error_key("p_interf = -0.1\n") == "p_interf");
        CHECK(error_key("n_samples = 0\n") == "n_samples");
        CHECK(error_key("[environment]\nclutter_loss_db = 0,0,0,0,-1,0,0,0,0\n") == "environment.clutter_loss_db");
        CHECK(error_key("[region]\nr_edges_m = 0, 50, 40\n") == "region.r_edges_m");
        CHECK(error_key("[grid]\nhap_altitude_m = 100\n") == "grid.hap_altitude_m");
        CHECK(error_key("p_interf = abc\n") == "p_interf");

        const auto c = parse_config("delay_threshold_ms = 50\n");
        CHECK(c.delay_threshold_ms == 50.0);
        CHECK(c.qos().d_max_s == doctest::Approx(0.05));
    }

    TEST_CASE("unknown keys are rejected")
    {
        CHECK(error_key("p_interference = 0.1\n") == "p_interference");
        CHECK(error_key("[radio]\nbandwidth = 1\n") == "radio.bandwidth");
    }

    TEST_CASE("syntax errors carry the line")
    {
        try {
            (void)parse_config("seed = 3\n[radio\n", "bad.ini");
            FAIL("no error");
        } catch (const ConfigError& e) {
            CHECK(std::string(e.what()).find("bad.ini:2") != std::string::npos);
        }
    }

    TEST_CASE("overrides")
    {
        ScenarioConfig c;
        apply_override(c, "p_interf=0.1");
        apply_override(c, "radio.bandwidth_ga_hz = 2e5");
        apply_override(c, "interference_mode=bernoulli");
        CHECK(c.p_interf == 0.1);
        CHECK(c.bandwidth_ga_hz == 2e5);
        CHECK(c.interference_mode == InterferenceMode::Bernoulli);

        // a rejected override leaves the config untouched
        const auto before = dump_config(c);
        CHECK_THROWS_AS(apply_override(c, "p_interf=1.5"), ConfigError);
        CHECK_THROWS_AS(apply_override(c, "p_interf"), ConfigError);
        CHECK_THROWS_AS(apply_override(c, "nope=1"), ConfigError);
        CHECK(dump_config(c) == before);
    }

    TEST_CASE("dump round trip and hash")
    {
        ScenarioConfig c;
        apply_override(c, "p_interf=0.3");
        apply_override(c, "sweep.rates_kbps=10,20,40");
        apply_override(c, "seed=77");
        const auto text = dump_config(c);
        CHECK(text.find("0.29999") == std::string::npos);
        const auto back = parse_config(text);
        CHECK(dump_config(back) == text);
        CHECK(config_hash(back) == config_hash(c));
        CHECK(config_hash(c).size() == 16);

        ScenarioConfig other = c;
        apply_override(other, "p_interf=0.31");
        CHECK(config_hash(other) != config_hash(c));
        // hash is a pure function of the values
        CHECK(config_hash(ScenarioConfig{}) == config_hash(ScenarioConfig{}));
    }

    TEST_CASE("every listed key appears in the dump")
    {
        const auto keys = config_keys();
        CHECK(keys.size() > 50);
        const ScenarioConfig c;
        const auto text = dump_config(c);
        for (const auto& k : keys) {
            const auto dot = k.find('.');
            const std::string leaf = dot == std::string::npos ? k : k.substr(dot + 1);
            CHECK_MESSAGE(text.find(leaf + " = ") != std::string::npos, k);
        }
    }
}
