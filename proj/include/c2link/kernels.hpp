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

// Monte Carlo kernels. Each comes in two builds with identical arithmetic:
// the OpenMP version in c2link::kernels and a plain loop in
// c2link::kernels::serial kept as the reference for tests and benchmarks.
// Work is cut into fixed chunks; chunk c draws from stream.substream(c) and
// partial sums are reduced in chunk order, so results do not depend on the
// number of threads.

#include "c2link/link.hpp"
#include "c2link/mathfun.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace c2link {

class ConditionalErrorTable;

namespace kernels {

inline constexpr std::int64_t kChunk = 4096;

/// Per-link state with samplers built once.
class PreparedLink {
public:
    explicit PreparedLink(const LinkModel& link);

    /// Full SINR draw.
    double sinr(Rng& rng) const;

    /// (P_interf I + N) / (S_mean * shadow): everything but the desired link's
    /// small-scale fading, normalized by the desired mean power.
    double impairment(Rng& rng) const;

private:
    struct Source {
        double mean_power;
        double shadow_sigma_db;
        RicianSampler fading;
    };
    Source desired_;
    std::vector<Source> interferers_;
    double p_interf_;
    InterferenceMode mode_;
    double noise_w_;

    double interference(Rng& rng) const;
};

struct MeanEstimate {
    double mean = 0.0;
    double complement = 1.0; // mean of (1 - value), accumulated separately
    double std_error = 0.0;
    std::int64_t n = 0;
};

struct FblSetting {
    double bandwidth_hz;
    double d_t_s;
    double bits;
};

std::vector<double> sample_sinr(const LinkModel& link, std::int64_t n, RngStream stream);
std::vector<double> sample_impairment(const LinkModel& link, std::int64_t n, RngStream stream);
MeanEstimate mean_fbl_error(std::span<const double> sinr, const FblSetting& setting);
MeanEstimate mean_conditional_error(std::span<const double> impairment, const ConditionalErrorTable& table);

namespace serial {

std::vector<double> sample_sinr(const LinkModel& link, std::int64_t n, RngStream stream);
std::vector<double> sample_impairment(const LinkModel& link, std::int64_t n, RngStream stream);
MeanEstimate mean_fbl_error(std::span<const double> sinr, const FblSetting& setting);
MeanEstimate mean_conditional_error(std::span<const double> impairment, const ConditionalErrorTable& table);

} // namespace serial

// Shared per-chunk pieces, used by both builds.
namespace detail {

struct Partial {
    double sum = 0.0;
    double sum_complement = 0.0;
    double sum_sq = 0.0;
};

std::int64_t chunk_count(std::int64_t n);
void fill_sinr_chunk(const PreparedLink& link, RngStream stream, std::int64_t chunk, std::span<double> out);
void fill_impairment_chunk(const PreparedLink& link, RngStream stream, std::int64_t chunk, std::span<double> out);
Partial fbl_error_chunk(std::span<const double> sinr, const FblSetting& setting);
Partial conditional_chunk(std::span<const double> impairment, const ConditionalErrorTable& table);
MeanEstimate reduce(std::span<const Partial> partials, std::int64_t n);

} // namespace detail

} // namespace kernels
} // namespace c2link
