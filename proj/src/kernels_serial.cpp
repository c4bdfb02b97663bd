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

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace c2link::kernels {

PreparedLink::PreparedLink(const LinkModel& link)
    : desired_{link.desired.mean_power_w(), link.desired.shadow_sigma_db, RicianSampler(link.desired.k_factor_db)}
    , p_interf_(Probability(link.interference.p_interf))
    , mode_(link.interference.mode)
    , noise_w_(link.radio.noise_power_w())
{
    if (!(noise_w_ >= 0.0))
        throw std::invalid_argument("noise power must be non-negative");
    interferers_.reserve(link.interference.sources.size());
    for (const auto& s : link.interference.sources)
        interferers_.push_back({s.mean_power_w(), s.shadow_sigma_db, RicianSampler(s.k_factor_db)});
}

namespace {

inline double shadow_factor(double sigma_db, Rng& rng)
{
    if (sigma_db <= 0.0)
        return 1.0;
    return db_to_linear(-sigma_db * rng.normal());
}

} // namespace

double PreparedLink::interference(Rng& rng) const
{
    double sum = 0.0;
    if (mode_ == InterferenceMode::Expected) {
        for (const auto& s : interferers_)
            sum += s.mean_power * shadow_factor(s.shadow_sigma_db, rng) * s.fading(rng);
        return p_interf_ * sum;
    }
    // activity drawn for every source so the stream layout does not depend on P_interf
    for (const auto& s : interferers_) {
        const bool active = rng.uniform() < p_interf_;
        const double p = s.mean_power * shadow_factor(s.shadow_sigma_db, rng) * s.fading(rng);
        if (active)
            sum += p;
    }
    return sum;
}

double PreparedLink::sinr(Rng& rng) const
{
    const double s = desired_.mean_power * shadow_factor(desired_.shadow_sigma_db, rng);
    const double w = desired_.fading(rng);
    return s * w / (interference(rng) + noise_w_);
}

double PreparedLink::impairment(Rng& rng) const
{
    const double s = desired_.mean_power * shadow_factor(desired_.shadow_sigma_db, rng);
    return (interference(rng) + noise_w_) / s;
}

namespace detail {

std::int64_t chunk_count(std::int64_t n)
{
    if (n < 0)
        throw std::invalid_argument("sample count must be non-negative");
    return (n + kChunk - 1) / kChunk;
}

void fill_sinr_chunk(const PreparedLink& link, RngStream stream, std::int64_t chunk, std::span<double> out)
{
    Rng rng(stream.substream(static_cast<std::uint64_t>(chunk)));
    for (double& v : out)
        v = link.sinr(rng);
}

void fill_impairment_chunk(const PreparedLink& link, RngStream stream, std::int64_t chunk, std::span<double> out)
{
    Rng rng(stream.substream(static_cast<std::uint64_t>(chunk)));
    for (double& v : out)
        v = link.impairment(rng);
}

Partial fbl_error_chunk(std::span<const double> sinr, const FblSetting& setting)
{
    Partial p;
    for (double g : sinr) {
        const double a = fbl_q_argument(g, setting.bandwidth_hz, setting.d_t_s, setting.bits);
        const double e = gaussian_q(a);
        p.sum += e;
        p.sum_complement += gaussian_q(-a);
        p.sum_sq += e * e;
    }
    return p;
}

Partial conditional_chunk(std::span<const double> impairment, const ConditionalErrorTable& table)
{
    Partial p;
    for (double x : impairment) {
        const double e = table(x);
        p.sum += e;
        p.sum_complement += 1.0 - e;
        p.sum_sq += e * e;
    }
    return p;
}

MeanEstimate reduce(std::span<const Partial> partials, std::int64_t n)
{
    if (n < 1)
        throw std::invalid_argument("mean of zero samples");
    Partial t;
    for (const auto& p : partials) {
        t.sum += p.sum;
        t.sum_complement += p.sum_complement;
        t.sum_sq += p.sum_sq;
    }
    MeanEstimate m;
    m.n = n;
    m.mean = t.sum / n;
    m.complement = t.sum_complement / n;
    if (n > 1) {
        const double var = std::max(0.0, t.sum_sq / n - m.mean * m.mean) * n / (n - 1.0);
        m.std_error = std::sqrt(var / n);
    }
    return m;
}

} // namespace detail

namespace serial {

namespace {

template <class Fill>
std::vector<double> sample(const LinkModel& link, std::int64_t n, RngStream stream, Fill fill)
{
    const PreparedLink prepared(link);
    std::vector<double> out(static_cast<std::size_t>(std::max<std::int64_t>(n, 0)));
    const std::int64_t chunks = detail::chunk_count(n);
    for (std::int64_t c = 0; c < chunks; ++c) {
        const std::int64_t begin = c * kChunk;
        const std::int64_t len = std::min(kChunk, n - begin);
        fill(prepared, stream, c, std::span<double>(out.data() + begin, static_cast<std::size_t>(len)));
    }
    return out;
}

template <class Body>
MeanEstimate mean(std::span<const double> xs, Body body)
{
    const auto n = static_cast<std::int64_t>(xs.size());
    const std::int64_t chunks = detail::chunk_count(n);
    std::vector<detail::Partial> partials(static_cast<std::size_t>(chunks));
    for (std::int64_t c = 0; c < chunks; ++c) {
        const std::int64_t begin = c * kChunk;
        partials[c] = body(xs.subspan(begin, std::min(kChunk, n - begin)));
    }
    return detail::reduce(partials, n);
}

} // namespace

std::vector<double> sample_sinr(const LinkModel& link, std::int64_t n, RngStream stream)
{
    return sample(link, n, stream, detail::fill_sinr_chunk);
}

std::vector<double> sample_impairment(const LinkModel& link, std::int64_t n, RngStream stream)
{
    return sample(link, n, stream, detail::fill_impairment_chunk);
}

MeanEstimate mean_fbl_error(std::span<const double> sinr, const FblSetting& setting)
{
    return mean(sinr, [&](std::span<const double> s) { return detail::fbl_error_chunk(s, setting); });
}

MeanEstimate mean_conditional_error(std::span<const double> impairment, const ConditionalErrorTable& table)
{
    return mean(impairment, [&](std::span<const double> s) { return detail::conditional_chunk(s, table); });
}

} // namespace serial

} // namespace c2link::kernels
