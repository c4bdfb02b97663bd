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
#include "c2link/rng.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace c2link {

struct RadioParams {
    double bandwidth_hz = 0.4e6;
    double noise_density_w_per_hz = 3.981071705534973e-21; // -174 dBm/Hz
    double noise_figure_db = 9.0;

    [[nodiscard]] double noise_power_w() const;
};

/// One transmitter as seen by a receiver: large-scale terms plus the Rician K
/// that shapes its small-scale fading.
struct ChannelTerm {
    double tx_power_w = 1.0;
    double path_loss_db = 0.0;
    double tx_gain = 1.0;
    double rx_gain = 1.0;
    double k_factor_db = 0.0;
    double shadow_sigma_db = 0.0; // per-realization log-normal term on top of path_loss_db

    /// p g_tx g_rx / PL, excluding fading and shadowing.
    [[nodiscard]] double mean_power_w() const;
};

enum class InterferenceMode {
    Expected,  // I = P_interf * sum of interferer powers
    Bernoulli, // each interferer active independently with probability P_interf
};

const char* to_string(InterferenceMode mode);

struct InterfererSet {
    std::vector<ChannelTerm> sources;
    double p_interf = 0.0;
    InterferenceMode mode = InterferenceMode::Expected;
};

struct LinkModel {
    LinkKind kind = LinkKind::G2A;
    ChannelTerm desired;
    InterfererSet interference;
    RadioParams radio;
    double distance_m = 0.0; // 3D transmitter-receiver separation
};

/// Monte Carlo result for one link at one packet duration.
struct LinkStats {
    double eps_t_bar = 0.0;  // mean decoding error
    double d_t_bar = 0.0;    // mean ARQ transmission delay, s
    std::int64_t n_samples = 0;
    double std_error = 0.0;  // of eps_t_bar
    double d_t = 0.0;        // single-attempt transmission time, s
};

/// Fills LinkStats from an estimated mean error and its complement 1 - mean
/// (kept separately so the ARQ delay stays accurate when the mean is tiny).
LinkStats make_link_stats(double eps_mean, double success_mean, double std_error, std::int64_t n_samples,
                          double d_t_s, int max_attempts = 0);

/// One SINR realization.
double sinr_sample(const LinkModel& link, Rng& rng);

/// Achievable rate at error eps. Can be negative for very short blocks.
double fbl_rate(double gamma, double bandwidth_hz, double d_t_s, double eps);

/// Decoding error of a b-bit packet sent in d_t seconds.
double fbl_error(double gamma, double bandwidth_hz, double d_t_s, double bits);

/// Argument of Q in fbl_error; +inf/-inf at the extremes.
double fbl_q_argument(double gamma, double bandwidth_hz, double d_t_s, double bits);

/// Mean delay with retransmission until success (max_attempts = 0) or capped.
double arq_delay(double d_t_s, double eps_bar, int max_attempts = 0);

/// Sample mean of fbl_error over independent SINR draws.
LinkStats avg_decoding_error(const LinkModel& link, double bits, double d_t_s, std::int64_t n_samples,
                             RngStream stream, int max_attempts = 0);

struct DiversityResult {
    double eps = 0.0;
    double delay_s = 0.0;
};

/// K parallel frequency branches: errors multiply, delay is the best branch.
DiversityResult freq_diversity(std::span<const LinkStats> branches);

} // namespace c2link
