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

#include "c2link/link.hpp"

#include "c2link/kernels.hpp"
#include "c2link/mathfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace c2link {

double RadioParams::noise_power_w() const
{
    return bandwidth_hz * noise_density_w_per_hz * db_to_linear(noise_figure_db);
}

double ChannelTerm::mean_power_w() const
{
    return tx_power_w * tx_gain * rx_gain / db_to_linear(path_loss_db);
}

const char* to_string(InterferenceMode mode)
{
    return mode == InterferenceMode::Expected ? "expected" : "bernoulli";
}

double sinr_sample(const LinkModel& link, Rng& rng)
{
    return kernels::PreparedLink(link).sinr(rng);
}

namespace {

// V = 1 - (1+g)^-2 without cancellation at small g
double dispersion(double gamma)
{
    return -std::expm1(-2.0 * std::log1p(gamma));
}

} // namespace

double fbl_rate(double gamma, double bandwidth_hz, double d_t_s, double eps)
{
    if (!(gamma > 0.0 && bandwidth_hz > 0.0 && d_t_s > 0.0))
        throw std::invalid_argument("fbl_rate: gamma, bandwidth and d_t must be positive");
    const double capacity = std::log1p(gamma) / std::numbers::ln2;
    const double penalty = std::sqrt(dispersion(gamma) / (bandwidth_hz * d_t_s)) * gaussian_q_inv(eps) / std::numbers::ln2;
    return bandwidth_hz * (capacity - penalty);
}

double fbl_q_argument(double gamma, double bandwidth_hz, double d_t_s, double bits)
{
    if (!(bandwidth_hz > 0.0 && d_t_s > 0.0 && bits > 0.0))
        throw std::invalid_argument("fbl_error: bandwidth, d_t and bits must be positive");
    if (std::isnan(gamma) || gamma < 0.0)
        throw std::invalid_argument("fbl_error: gamma must be non-negative");
    if (gamma == 0.0)
        return -std::numeric_limits<double>::infinity();
    if (std::isinf(gamma))
        return std::numeric_limits<double>::infinity();
    const double num = (bandwidth_hz * std::log1p(gamma) / std::numbers::ln2 - bits / d_t_s) * std::numbers::ln2;
    return num / std::sqrt(bandwidth_hz * dispersion(gamma) / d_t_s);
}

double fbl_error(double gamma, double bandwidth_hz, double d_t_s, double bits)
{
    return gaussian_q(fbl_q_argument(gamma, bandwidth_hz, d_t_s, bits));
}

double arq_delay(double d_t_s, double eps_bar, int max_attempts)
{
    if (!(d_t_s >= 0.0))
        throw std::invalid_argument("arq_delay: d_t must be non-negative");
    if (!(eps_bar >= 0.0 && eps_bar <= 1.0))
        throw std::domain_error("arq_delay: eps_bar must lie in [0, 1]");
    if (max_attempts < 0)
        throw std::invalid_argument("arq_delay: max_attempts must be >= 0");
    if (max_attempts == 0) {
        if (eps_bar >= 1.0)
            throw std::domain_error("arq_delay: unbounded retransmission never succeeds at eps_bar = 1");
        return d_t_s / (1.0 - eps_bar);
    }
    // expected airtime of at most M attempts
    if (eps_bar >= 1.0)
        return d_t_s * max_attempts;
    return d_t_s * (-std::expm1(max_attempts * std::log(eps_bar))) / (1.0 - eps_bar);
}

LinkStats avg_decoding_error(const LinkModel& link, double bits, double d_t_s, std::int64_t n_samples,
                             RngStream stream, int max_attempts)
{
    if (n_samples < 1)
        throw std::invalid_argument("avg_decoding_error: n_samples must be >= 1");
    const auto sinr = kernels::sample_sinr(link, n_samples, stream);
    const auto est = kernels::mean_fbl_error(sinr, {link.radio.bandwidth_hz, d_t_s, bits});

    return make_link_stats(est.mean, est.complement, est.std_error, est.n, d_t_s, max_attempts);
}

LinkStats make_link_stats(double eps_mean, double success_mean, double std_error, std::int64_t n_samples,
                          double d_t_s, int max_attempts)
{
    LinkStats s;
    s.eps_t_bar = std::clamp(eps_mean, 0.0, 1.0);
    s.n_samples = n_samples;
    s.std_error = std_error;
    s.d_t = d_t_s;
    if (max_attempts == 0)
        s.d_t_bar = success_mean > 0.0 ? d_t_s / success_mean : std::numeric_limits<double>::infinity();
    else
        s.d_t_bar = arq_delay(d_t_s, s.eps_t_bar, max_attempts);
    return s;
}

DiversityResult freq_diversity(std::span<const LinkStats> branches)
{
    if (branches.empty())
        throw std::invalid_argument("freq_diversity: at least one branch required");
    DiversityResult r{1.0, std::numeric_limits<double>::infinity()};
    for (const auto& b : branches) {
        r.eps *= b.eps_t_bar;
        r.delay_s = std::min(r.delay_s, b.d_t_bar);
    }
    return r;
}

} // namespace c2link
