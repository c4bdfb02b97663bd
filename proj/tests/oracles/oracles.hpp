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

// Reference implementations used only by the tests. None of them share code
// with the library: series are summed in 100-digit arithmetic, the Gaussian
// tail is integrated numerically, and the Rician CDF comes from Boost's
// noncentral chi-squared distribution.

#include <boost/math/distributions/non_central_chi_squared.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <numbers>

namespace oracle {

using big = boost::multiprecision::cpp_bin_float_100;

/// J1 by its power series, summed until the terms vanish at 100 digits.
inline double bessel_j1(double xd)
{
    const big x = xd;
    const big h = x / 2;
    big term = h; // k = 0
    big sum = term;
    for (int k = 1; k < 400; ++k) {
        term *= -(h * h) / (big(k) * big(k + 1));
        sum += term;
        if (abs(term) < abs(sum) * big("1e-60") && k > 5)
            break;
    }
    return static_cast<double>(sum);
}

inline double bessel_i0(double xd)
{
    const big h = big(xd) / 2;
    big term = 1;
    big sum = 1;
    for (int k = 1; k < 2000; ++k) {
        term *= (h * h) / (big(k) * big(k));
        sum += term;
        if (term < sum * big("1e-60"))
            break;
    }
    return static_cast<double>(sum);
}

/// Upper normal tail by adaptive Gauss-Kronrod on [x, x + 40].
inline double gaussian_q(double x)
{
    if (x < 0.0)
        return 1.0 - gaussian_q(-x);
    const auto pdf = [](double t) { return std::exp(-0.5 * t * t) / std::sqrt(2.0 * std::numbers::pi); };
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(pdf, x, x + 40.0, 15, 1e-15);
}

/// Inverse tail by bisection on the quadrature tail.
inline double gaussian_q_inv(double p)
{
    double lo = -40.0, hi = 40.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (gaussian_q(mid) > p)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

/// P(|rho + n|^2 <= t) with rho^2 = K/(K+1) and complex Gaussian n of total
/// variance 1/(K+1). Scaled by 1/sigma^2 this is noncentral chi-squared with
/// two degrees of freedom.
inline double rician_power_cdf(double t, double k_db)
{
    const double k = std::pow(10.0, k_db / 10.0);
    const double sigma2 = 0.5 / (k + 1.0);
    const double rho2 = k / (k + 1.0);
    boost::math::non_central_chi_squared dist(2.0, rho2 / sigma2);
    return boost::math::cdf(dist, t / sigma2);
}

/// Rician amplitude density written directly from its textbook form.
inline double rician_amplitude_pdf(double r, double k_db)
{
    const double k = std::pow(10.0, k_db / 10.0);
    const big sigma2 = big(0.5 / (k + 1.0));
    const big rho = sqrt(big(k / (k + 1.0)));
    const big rr = r;
    const big arg = rr * rho / sigma2;
    // I0 by series in 100-digit arithmetic
    big term = 1, i0 = 1;
    for (int j = 1; j < 4000; ++j) {
        term *= (arg / 2) * (arg / 2) / (big(j) * big(j));
        i0 += term;
        if (term < i0 * big("1e-40"))
            break;
    }
    const big v = rr / sigma2 * exp(-(rr * rr + rho * rho) / (2 * sigma2)) * i0;
    return static_cast<double>(v);
}

/// Minimal constant service rate for Poisson arrivals, 100-digit arithmetic.
inline double effective_bandwidth(double lambda, double d_q, double eps_q)
{
    const big l = log(1 / big(eps_q));
    const big e = l / (big(d_q) * log(l / (big(lambda) * big(d_q)) + 1));
    return static_cast<double>(e);
}

/// Achievable finite-blocklength rate written from its textbook form.
inline double fbl_rate(double gamma, double b, double d_t, double eps)
{
    const double v = 1.0 - 1.0 / ((1.0 + gamma) * (1.0 + gamma));
    return b * (std::log2(1.0 + gamma) - std::sqrt(v / (b * d_t)) * gaussian_q_inv(eps) / std::numbers::ln2);
}

} // namespace oracle
