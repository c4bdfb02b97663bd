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

// Conditional decoding-error estimator.
//
// Write the SINR as gamma = w / x, where w is the desired link's unit-mean
// Rician power and x = (I + N) / S_mean collects interference, noise and
// shadowing. For a fixed x the average over w has a closed form:
//
//   E_w[Q(a(w / x))] = E_Z[F(gamma*(Z) x)],   a(gamma*(z)) = z,
//
// with F the Rician power CDF and Z standard normal. The Z-integral is done
// with Gauss-Hermite quadrature and tabulated over log10 x. Averaging this
// function over Monte Carlo draws of x gives the same mean as the plain
// estimator with far smaller variance in the 1e-5 range.

#include "c2link/kernels.hpp"
#include "c2link/link.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

namespace c2link {

/// Nodes and weights for E[f(Z)], Z ~ N(0, 1).
struct GaussHermiteRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussHermiteRule gauss_hermite_normal(int order);

class ConditionalErrorTable {
public:
    /// K above this is treated as deterministic (unit) fading.
    static constexpr double kDeterministicKdb = 40.0;

    ConditionalErrorTable(double k_factor_db, double bandwidth_hz, double d_t_s, double bits, int order = 40);

    /// Tabulated E[fbl_error | x].
    double operator()(double x) const;

    /// The same quantity by direct quadrature, no table.
    [[nodiscard]] double exact(double x) const;

    /// SINR at which the Q argument equals z.
    [[nodiscard]] double gamma_star(double z) const;

    [[nodiscard]] double k_factor_db() const { return k_db_; }

private:
    double k_db_;
    double bandwidth_hz_;
    double d_t_s_;
    double bits_;
    bool deterministic_;
    std::vector<double> gamma_star_; // at the quadrature nodes
    std::vector<double> weights_;
    std::vector<double> log_g_;      // ln G on the log10 x grid

    static constexpr double kLogXMin = -10.0;
    static constexpr double kLogXMax = 4.0;
    static constexpr int kPerDecade = 32;
};

/// Thread-safe cache keyed by (K, B, d_t, bits).
class ConditionalTableCache {
public:
    std::shared_ptr<const ConditionalErrorTable> get(double k_factor_db, double bandwidth_hz, double d_t_s, double bits);
    [[nodiscard]] std::size_t size() const;

private:
    using Key = std::tuple<double, double, double, double>;
    mutable std::mutex mutex_;
    std::map<Key, std::shared_ptr<const ConditionalErrorTable>> tables_;
};

/// LinkStats from pre-drawn impairment samples x.
LinkStats conditional_link_stats(std::span<const double> impairment, const ConditionalErrorTable& table,
                                 double d_t_s, int max_attempts = 0);

/// Draws impairments and evaluates the conditional estimator in one call.
LinkStats avg_decoding_error_conditional(const LinkModel& link, double bits, double d_t_s, std::int64_t n_samples,
                                         RngStream stream, int max_attempts = 0);

} // namespace c2link
