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

#pragma once

#include "c2link/channel.hpp"
#include "c2link/e2e.hpp"
#include "c2link/geometry.hpp"
#include "c2link/link.hpp"
#include "c2link/queueing.hpp"

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace c2link {

/// Parse or validation failure. key() names the offending entry when known.
class ConfigError : public std::invalid_argument {
public:
    ConfigError(const std::string& message, std::string key = {});
    [[nodiscard]] const std::string& key() const { return key_; }

private:
    std::string key_;
};

enum class Estimator {
    Plain,       // sample mean of the decoding error over full SINR draws
    Conditional, // desired-link fading integrated out per draw
};

const char* to_string(Estimator e);

struct ScenarioConfig {
    std::uint64_t seed = 1;
    std::int64_t n_samples = 100000;
    int topologies = 20;

    double p_interf = 0.01;
    InterferenceMode interference_mode = InterferenceMode::Expected;
    Estimator estimator = Estimator::Conditional;

    double packet_size_bits = 256.0;
    double packet_loss_target = 1e-5;
    double delay_threshold_ms = 10.0;
    double backhaul_failure_prob = 1e-6;
    double backhaul_delay_ms = 1.0;
    double carrier_ghz = 2.0;

    int av_count = 10;
    int interferer_count = 6;
    int max_relays = 3;
    int diversity_order = 1;
    int arq_max_attempts = 0;

    // geometry
    GridSpec grid;
    double bs_height_m = 25.0;
    double av_altitude_m = 300.0;
    double hap_altitude_m = 20000.0;
    double gs_offset_m = 5000.0;

    // radio
    double bandwidth_ga_hz = 0.4e6;
    double bandwidth_aa_hz = 0.4e6;
    double bandwidth_ha_hz = 0.4e6;
    double bandwidth_gh_hz = 0.5e6;
    double noise_density_dbm_hz = -174.0;
    double av_noise_figure_db = 9.0;
    double hap_noise_figure_db = 5.0;
    double av_tx_power_dbm = 23.0;
    double bs_tx_power_dbm = 46.0;
    double hap_tx_power_dbm = 46.0;
    double gs_tx_power_dbm = 46.0;

    // antennas
    int ula_elements = 8;
    double ula_element_gain_dbi = 8.0;
    double ula_downtilt_deg = 102.0;
    double hap_gain_dbi = 32.0;
    double hap_aperture_wavelengths = 10.0;
    double av_gain_dbi = 0.0;
    double gs_gain_dbi = 0.0;

    Environment env;
    RiceTable rice;

    // queues; the ground station shares the ground-BS figures
    double queue_delay_bound_ms = 0.3;
    double queue_violation_prob = 1e-7;
    double arrival_bs = 1000.0;
    double arrival_av = 100.0;
    double arrival_hap = 10000.0;
    double service_bs = 20000.0;
    double service_av = 10000.0;
    double service_hap = 40000.0;

    // experiments
    double sweep_r_ga_m = 150.0;
    std::vector<double> sweep_rates_kbps;       // default: 21 log-spaced points, 10 kbps to 1 Mbps
    std::vector<double> region_r_edges_m;       // default: 0, 20, ..., 260
    std::vector<double> region_rate_edges_kbps; // default: 0, 100, ..., 1000

    ScenarioConfig();

    /// Throws ConfigError naming the first offending key.
    void validate() const;

    [[nodiscard]] QosTarget qos() const;
    [[nodiscard]] BackhaulSpec backhaul() const;
    [[nodiscard]] QueueSpec queue(double arrival) const;
    [[nodiscard]] UlaAntenna ula() const;
    [[nodiscard]] ReflectorAntenna hap_reflector() const;
    [[nodiscard]] RadioParams radio(double bandwidth_hz, double noise_figure_db) const;
};

/// Parses INI text. `origin` is used in messages.
ScenarioConfig parse_config(const std::string& text, const std::string& origin = "<config>");

/// Reads and validates a config file.
ScenarioConfig load_config(const std::filesystem::path& path);

/// Applies one "key=value" override (section keys as section.key) and revalidates.
void apply_override(ScenarioConfig& config, const std::string& assignment);

/// Every key with its current value, in a fixed order, INI-formatted.
std::string dump_config(const ScenarioConfig& config);

/// FNV-1a of dump_config, as 16 hex digits.
std::string config_hash(const ScenarioConfig& config);

/// Accepted keys, section-qualified.
std::vector<std::string> config_keys();

} // namespace c2link
