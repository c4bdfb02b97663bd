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

#include "c2link/mathfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace c2link {

Probability::Probability(double value)
    : value_(value)
{
    if (!(value >= 0.0 && value <= 1.0))
        throw std::domain_error("probability out of [0, 1]: " + std::to_string(value));
}

double linear_to_db(double linear)
{
    return 10.0 * std::log10(linear);
}

double gaussian_q(double x)
{
    return 0.5 * std::erfc(x / std::numbers::sqrt2);
}

namespace {

double normal_pdf(double x)
{
    return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

// Root of Q(x) = p for 0 < p < 0.5, so x > 0.
double upper_tail_inverse(double p)
{
    double lo = 0.0;
    double hi = 38.5; // Q(38.5) is below the smallest subnormal
    double x = std::min(std::sqrt(-2.0 * std::log(p)), hi - 1.0);
    const double log_p = std::log(p);

    for (int it = 0; it < 200; ++it) {
        const double q = gaussian_q(x);
        if (q > p)
            lo = x;
        else
            hi = x;

        double next;
        if (q > 0.0) {
            // Newton on log Q(x) - log p; log Q is close to quadratic in the tail
            next = x + (std::log(q) - log_p) * q / normal_pdf(x);
        } else {
            next = 0.5 * (lo + hi);
        }
        if (!(next > lo && next < hi))
            next = 0.5 * (lo + hi);

        if (std::abs(next - x) <= 1e-15 * std::max(1.0, x) || hi - lo <= 1e-15 * hi)
            return next;
        x = next;
    }
    return x;
}

} // namespace

double gaussian_q_inv(double p)
{
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error("gaussian_q_inv: p must lie in (0, 1), got " + std::to_string(p));
    if (p == 0.5)
        return 0.0;
    if (p > 0.5)
        return -upper_tail_inverse(1.0 - p);
    return upper_tail_inverse(p);
}

double bessel_j1(double x)
{
    if (x < 0.0)
        return -std::cyl_bessel_j(1.0, -x);
    return std::cyl_bessel_j(1.0, x);
}

double bessel_i0(double x)
{
    if (x < 0.0)
        throw std::domain_error("bessel_i0: x must be non-negative");
    const double v = std::cyl_bessel_i(0.0, x);
    if (!std::isfinite(v))
        throw std::overflow_error("bessel_i0 overflows for x = " + std::to_string(x));
    return v;
}

double log_bessel_i0(double x)
{
    if (x < 0.0)
        throw std::domain_error("log_bessel_i0: x must be non-negative");
    if (x <= 700.0)
        return std::log(std::cyl_bessel_i(0.0, x));

    // Hankel expansion: I0(x) ~ e^x / sqrt(2 pi x) * sum_k ((2k-1)!!)^2 / (k! (8x)^k)
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 12; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= odd * odd / (k * 8.0 * x);
        sum += term;
        if (term < 1e-17 * sum)
            break;
    }
    return x - 0.5 * std::log(2.0 * std::numbers::pi * x) + std::log(sum);
}

double rician_amplitude_pdf(double amplitude, double k_factor_db)
{
    if (amplitude <= 0.0)
        return 0.0;
    const double k = db_to_linear(k_factor_db);
    const double rho2 = k / (k + 1.0);
    const double sigma2 = 0.5 / (k + 1.0);
    const double rho = std::sqrt(rho2);
    const double log_f = std::log(amplitude) - std::log(sigma2)
                         - (amplitude * amplitude + rho2) / (2.0 * sigma2)
                         + log_bessel_i0(amplitude * rho / sigma2);
    return std::exp(log_f);
}

double rician_power_cdf(double threshold, double k_factor_db)
{
    if (threshold <= 0.0)
        return 0.0;
    const double k = db_to_linear(k_factor_db);
    if (k_factor_db > 60.0)
        return threshold >= 1.0 ? 1.0 : 0.0;

    const double sd = std::sqrt(1.0 + 2.0 * k) / (k + 1.0);
    if (threshold > 1.0 + 40.0 * sd)
        return 1.0;

    // With y = (K + 1) w the CDF is a Poisson mixture:
    //   F = sum_{m >= 1} Pois(m; y) * P(Pois(K) <= m - 1)
    // Every term is positive, so small values keep full relative accuracy.
    const double y = (k + 1.0) * threshold;
    const double log_y = std::log(y);
    const double log_k = std::log(k);
    const double sqrt_y = std::sqrt(y);
    const int m_lo = std::max(1, static_cast<int>(y - 30.0 * sqrt_y));
    const double m_max = y + 40.0 * sqrt_y + 60.0;
    const double k_tail_end = k + 40.0 * std::sqrt(k) + 60.0;
    const bool k_recurrence = k < 700.0; // exp(-k) still a normal double

    double k_pmf = std::exp(-k);
    double k_cdf = 0.0; // P(Pois(K) <= m - 1)
    double y_pmf = 0.0; // Pois(m; y)
    double sum = 0.0;
    for (int m = 1; m <= m_max; ++m) {
        if (k_cdf < 1.0) {
            if (m - 1 > k_tail_end) {
                k_cdf = 1.0;
            } else {
                const double p = k_recurrence ? k_pmf : std::exp(-k + (m - 1) * log_k - std::lgamma(static_cast<double>(m)));
                k_cdf = std::min(1.0, k_cdf + p);
                k_pmf *= k / m;
            }
        }
        if (m < m_lo)
            continue;
        // restart from logs while the recurrence would run on denormals
        y_pmf = (m == m_lo || y_pmf < std::numeric_limits<double>::min()) ? std::exp(-y + m * log_y - std::lgamma(m + 1.0)) : y_pmf * y / m;
        const double term = y_pmf * k_cdf;
        sum += term;
        if (m > y && term < 1e-18 * sum)
            break;
    }
    return std::min(sum, 1.0);
}

RicianSampler::RicianSampler(double k_factor_db)
    : k_factor_db_(k_factor_db)
{
    const double k = db_to_linear(k_factor_db);
    los_amplitude_ = std::sqrt(k / (k + 1.0));
    scatter_sigma_ = std::sqrt(0.5 / (k + 1.0));
}

double sample_rician_power(double k_factor_db, Rng& rng)
{
    return RicianSampler(k_factor_db)(rng);
}

double sample_lognormal_shadow_db(double sigma_db, Rng& rng)
{
    if (sigma_db < 0.0)
        throw std::domain_error("shadow fading sigma must be non-negative");
    return sigma_db * rng.normal();
}

} // namespace c2link
