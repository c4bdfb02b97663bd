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

#include "c2link/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace c2link {

/// A probability in [0, 1]. Construction outside the range throws.
class Probability {
public:
    constexpr Probability() = default;
    explicit Probability(double value);

    [[nodiscard]] constexpr double value() const { return value_; }
    constexpr operator double() const { return value_; }

private:
    double value_ = 0.0;
};

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double linear);
inline double dbm_to_watts(double dbm) { return db_to_linear(dbm - 30.0); }

// ---------- Gaussian tail ----------

/// P(Z > x) for standard normal Z.
double gaussian_q(double x);

/// Inverse of gaussian_q on (0, 1). Throws std::domain_error outside.
double gaussian_q_inv(double p);

// ---------- Bessel functions ----------

double bessel_j1(double x);

/// Throws std::domain_error for x < 0 and std::overflow_error once the result
/// no longer fits a double (x > ~713); use log_bessel_i0 there.
double bessel_i0(double x);
double log_bessel_i0(double x);

// ---------- Rician fading ----------
//
// The small-scale power gain w = |rho + n|^2 with rho^2 / (2 sigma^2) = K and
// rho^2 + 2 sigma^2 = 1, so E[w] = 1 for every K.

/// Density of the amplitude sqrt(w), written in terms of rho and sigma.
double rician_amplitude_pdf(double amplitude, double k_factor_db);

/// P(w <= threshold). Accurate in the lower tail (relative, not absolute).
double rician_power_cdf(double threshold, double k_factor_db);

/// Precomputed sampler for one K factor.
class RicianSampler {
public:
    explicit RicianSampler(double k_factor_db);

    double operator()(Rng& rng) const
    {
        const double re = los_amplitude_ + scatter_sigma_ * rng.normal();
        const double im = scatter_sigma_ * rng.normal();
        return re * re + im * im;
    }

    [[nodiscard]] double k_factor_db() const { return k_factor_db_; }

private:
    double k_factor_db_;
    double los_amplitude_;
    double scatter_sigma_;
};

double sample_rician_power(double k_factor_db, Rng& rng);

/// Zero-mean Gaussian draw in dB.
double sample_lognormal_shadow_db(double sigma_db, Rng& rng);

} // namespace c2link
