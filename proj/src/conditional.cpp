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

#include "c2link/mathfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace c2link {

GaussHermiteRule gauss_hermite_normal(int order)
{
    if (order < 1)
        throw std::invalid_argument("Gauss-Hermite order must be >= 1");
    const int n = order;
    std::vector<double> x(n), w(n);

    // Newton on the orthonormal physicists' Hermite recurrence, weight exp(-t^2)
    constexpr double kPiM4 = 0.7511255444649425; // pi^-1/4
    double z = 0.0;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        if (i == 0)
            z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -0.16667);
        else if (i == 1)
            z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
        else if (i == 2)
            z = 1.86 * z - 0.86 * x[0];
        else if (i == 3)
            z = 1.91 * z - 0.91 * x[1];
        else
            z = 2.0 * z - x[i - 2];

        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = kPiM4, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = z * std::sqrt(2.0 / (j + 1)) * p2 - std::sqrt(static_cast<double>(j) / (j + 1)) * p3;
            }
            pp = std::sqrt(2.0 * n) * p2;
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) <= 1e-15 * std::max(1.0, std::abs(z)))
                break;
        }
        x[i] = z;
        x[n - 1 - i] = -z;
        w[i] = w[n - 1 - i] = 2.0 / (pp * pp);
    }

    GaussHermiteRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = std::numbers::sqrt2 * x[n - 1 - i];
        rule.weights[i] = w[n - 1 - i] / std::sqrt(std::numbers::pi);
    }
    return rule;
}

ConditionalErrorTable::ConditionalErrorTable(double k_factor_db, double bandwidth_hz, double d_t_s, double bits, int order)
    : k_db_(k_factor_db)
    , bandwidth_hz_(bandwidth_hz)
    , d_t_s_(d_t_s)
    , bits_(bits)
    , deterministic_(k_factor_db > kDeterministicKdb)
{
    if (!(bandwidth_hz > 0.0 && d_t_s > 0.0 && bits > 0.0))
        throw std::invalid_argument("conditional table: bandwidth, d_t and bits must be positive");
    if (!std::isfinite(k_factor_db))
        throw std::invalid_argument("conditional table: K must be finite");
    if (deterministic_)
        return;

    const auto rule = gauss_hermite_normal(order);
    weights_ = rule.weights;
    gamma_star_.reserve(rule.nodes.size());
    for (double z : rule.nodes)
        gamma_star_.push_back(gamma_star(z));

    const int points = static_cast<int>((kLogXMax - kLogXMin) * kPerDecade) + 1;
    log_g_.resize(points);
    for (int i = 0; i < points; ++i) {
        const double x = std::pow(10.0, kLogXMin + static_cast<double>(i) / kPerDecade);
        log_g_[i] = std::log(std::max(exact(x), 1e-300));
    }
}

double ConditionalErrorTable::gamma_star(double z) const
{
    // a(gamma) is increasing; bisect in log gamma
    double lo = -80.0, hi = 80.0;
    for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (fbl_q_argument(std::exp(mid), bandwidth_hz_, d_t_s_, bits_) < z)
            lo = mid;
        else
            hi = mid;
    }
    return std::exp(0.5 * (lo + hi));
}

double ConditionalErrorTable::exact(double x) const
{
    if (x <= 0.0)
        return 0.0;
    if (deterministic_)
        return fbl_error(1.0 / x, bandwidth_hz_, d_t_s_, bits_);
    double g = 0.0;
    for (std::size_t i = 0; i < weights_.size(); ++i)
        g += weights_[i] * rician_power_cdf(gamma_star_[i] * x, k_db_);
    return std::min(g, 1.0);
}

double ConditionalErrorTable::operator()(double x) const
{
    if (x <= 0.0)
        return 0.0;
    if (deterministic_)
        return fbl_error(1.0 / x, bandwidth_hz_, d_t_s_, bits_);

    const double lx = std::log10(x);
    if (lx < kLogXMin) // F(w) ~ w near zero
        return std::exp(log_g_.front()) * x / std::pow(10.0, kLogXMin);
    const double u = (lx - kLogXMin) * kPerDecade;
    const int last = static_cast<int>(log_g_.size()) - 1;
    if (u >= last)
        return exact(x);

    const int i = static_cast<int>(u);
    const double t = u - i;
    const double p1 = log_g_[i];
    const double p2 = log_g_[i + 1];
    double v;
    if (i == 0 || i + 1 == last) {
        v = p1 + t * (p2 - p1);
    } else {
        // Catmull-Rom
        const double p0 = log_g_[i - 1];
        const double p3 = log_g_[i + 2];
        v = p1 + 0.5 * t * (p2 - p0 + t * (2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3 + t * (3.0 * (p1 - p2) + p3 - p0)));
    }
    return std::min(std::exp(v), 1.0);
}

std::shared_ptr<const ConditionalErrorTable> ConditionalTableCache::get(double k_factor_db, double bandwidth_hz,
                                                                        double d_t_s, double bits)
{
    const Key key{k_factor_db, bandwidth_hz, d_t_s, bits};
    {
        std::lock_guard lock(mutex_);
        if (auto it = tables_.find(key); it != tables_.end())
            return it->second;
    }
    auto table = std::make_shared<const ConditionalErrorTable>(k_factor_db, bandwidth_hz, d_t_s, bits);
    std::lock_guard lock(mutex_);
    return tables_.try_emplace(key, std::move(table)).first->second;
}

std::size_t ConditionalTableCache::size() const
{
    std::lock_guard lock(mutex_);
    return tables_.size();
}

LinkStats conditional_link_stats(std::span<const double> impairment, const ConditionalErrorTable& table,
                                 double d_t_s, int max_attempts)
{
    if (impairment.empty())
        throw std::invalid_argument("conditional estimator: no samples");
    const auto est = kernels::mean_conditional_error(impairment, table);
    return make_link_stats(est.mean, est.complement, est.std_error, est.n, d_t_s, max_attempts);
}

LinkStats avg_decoding_error_conditional(const LinkModel& link, double bits, double d_t_s, std::int64_t n_samples,
                                         RngStream stream, int max_attempts)
{
    if (n_samples < 1)
        throw std::invalid_argument("avg_decoding_error: n_samples must be >= 1");
    const ConditionalErrorTable table(link.desired.k_factor_db, link.radio.bandwidth_hz, d_t_s, bits);
    const auto x = kernels::sample_impairment(link, n_samples, stream);
    return conditional_link_stats(x, table, d_t_s, max_attempts);
}

} // namespace c2link
