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

#include "c2link/channel.hpp"

#include "c2link/mathfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace c2link {

const char* to_string(LinkKind kind)
{
    switch (kind) {
    case LinkKind::G2A: return "g2a";
    case LinkKind::A2A: return "a2a";
    case LinkKind::G2H: return "g2h";
    case LinkKind::H2A: return "h2a";
    }
    return "?";
}

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

} // namespace

double ula_array_factor(double zenith_deg, int elements, double downtilt_deg)
{
    if (elements < 1)
        throw std::invalid_argument("ULA needs at least one element");
    const double n = elements;
    const double psi = std::numbers::pi * (std::cos(zenith_deg * kDegToRad) - std::cos(downtilt_deg * kDegToRad)) / 2.0;
    const double s = std::sin(psi);
    // removable singularity on the tilt direction (and its grating images)
    if (std::abs(s) < 1e-9)
        return n;
    const double num = std::sin(n * psi);
    return num * num / (n * s * s);
}

double ula_gain(double zenith_deg, const UlaAntenna& spec)
{
    const double e = std::sin(zenith_deg * kDegToRad);
    return spec.element_max_gain * e * e * ula_array_factor(zenith_deg, spec.elements, spec.downtilt_deg);
}

double hap_pattern(double off_boresight_deg, double aperture_radius_wavelengths)
{
    const double u = 2.0 * std::numbers::pi * aperture_radius_wavelengths * std::sin(off_boresight_deg * kDegToRad);
    if (u == 0.0)
        return 1.0;
    if (std::abs(u) < 1e-4) {
        // 2 J1(u)/u = 1 - u^2/8 + u^4/192
        const double u2 = u * u;
        const double r = 1.0 - u2 / 8.0 + u2 * u2 / 192.0;
        return r * r;
    }
    const double r = 2.0 * bessel_j1(u) / u;
    return r * r;
}

double hap_gain(double off_boresight_deg, const ReflectorAntenna& spec)
{
    return spec.max_gain * hap_pattern(off_boresight_deg, spec.aperture_radius_wavelengths);
}

double antenna_gain(const AntennaSpec& spec, double angle_deg)
{
    struct Visitor {
        double angle;
        double operator()(const OmniAntenna& a) const { return a.gain; }
        double operator()(const UlaAntenna& a) const { return ula_gain(angle, a); }
        double operator()(const ReflectorAntenna& a) const { return hap_gain(angle, a); }
    };
    return std::visit(Visitor{angle_deg}, spec);
}

const RiceRange& RiceTable::operator[](LinkKind kind) const
{
    switch (kind) {
    case LinkKind::G2A: return g2a;
    case LinkKind::A2A: return a2a;
    case LinkKind::G2H: return g2h;
    case LinkKind::H2A: return h2a;
    }
    throw std::invalid_argument("unknown link kind");
}

int elevation_bin(double elevation_deg)
{
    if (!(elevation_deg >= 0.0 && elevation_deg <= 90.0))
        throw std::domain_error("elevation must lie in [0, 90] degrees");
    return std::min(static_cast<int>(elevation_deg / 10.0), 8);
}

double rice_k_db(LinkKind kind, double elevation_deg, const RiceTable& table)
{
    const RiceRange& range = table[kind];
    return range.k_min_db + (range.k_max_db - range.k_min_db) * elevation_bin(elevation_deg) / 8.0;
}

double p_los(double r_2d_m, double h_g_m, double h_a_m, const Environment& env)
{
    if (!(r_2d_m >= 0.0))
        throw std::domain_error("p_los: 2D distance must be non-negative");
    if (h_a_m == h_g_m)
        throw std::domain_error("p_los: equal terminal heights make the obstacle profile degenerate");
    if (!(h_g_m > 0.0 && h_a_m > 0.0))
        throw std::domain_error("p_los: heights must be positive");

    const int k = static_cast<int>(std::floor(r_2d_m * std::sqrt(env.q1 * env.q2) / 1000.0 - 1.0));
    double p = 1.0;
    for (int j = 0; j <= k; ++j) {
        const double h = h_g_m - (j + 0.5) * (h_g_m - h_a_m) / (k + 1.0);
        p *= 1.0 - std::exp(-(h * h) / (2.0 * env.q3 * env.q3));
    }
    return p;
}

double pl_g2a_los_db(double d_3d_m, double fc_ghz)
{
    return 28.0 + 22.0 * std::log10(d_3d_m) + 20.0 * std::log10(fc_ghz);
}

double pl_g2a_nlos_db(double d_3d_m, double h_a_m, double fc_ghz)
{
    return -17.5 + (46.0 - 7.0 * std::log10(h_a_m)) * std::log10(d_3d_m)
           + 20.0 * std::log10(40.0 * std::numbers::pi * fc_ghz / 3.0);
}

double pl_avg_g2a_db(double r_2d_m, double h_g_m, double h_a_m, double fc_ghz, const Environment& env)
{
    const double p = p_los(r_2d_m, h_g_m, h_a_m, env);
    const double d = std::hypot(r_2d_m, h_a_m - h_g_m);
    const double los = pl_g2a_los_db(d, fc_ghz);
    const double nlos = pl_g2a_nlos_db(d, h_a_m, fc_ghz);
    if (env.mixture == PathLossMixture::Linear)
        return -linear_to_db(p / db_to_linear(los) + (1.0 - p) / db_to_linear(nlos));
    return p * los + (1.0 - p) * nlos;
}

double fspl_db(double d_m, double fc_ghz)
{
    return 32.45 + 20.0 * std::log10(d_m) + 20.0 * std::log10(fc_ghz);
}

double clutter_loss_db(double elevation_deg, const Environment& env)
{
    return env.clutter_loss_db.at(static_cast<std::size_t>(elevation_bin(elevation_deg)));
}

double pl_g2h_db(double d_m, double fc_ghz, double elevation_deg, const Environment& env, Rng& rng)
{
    return fspl_db(d_m, fc_ghz) + sample_lognormal_shadow_db(env.sf_sigma_los_db, rng)
           + clutter_loss_db(elevation_deg, env);
}

double channel_power_sample(double pl_db, double tx_gain, double rx_gain, double k_db, Rng& rng)
{
    if (!(tx_gain > 0.0 && rx_gain > 0.0))
        throw std::domain_error("antenna gains must be positive");
    return tx_gain * rx_gain / db_to_linear(pl_db) * sample_rician_power(k_db, rng);
}

} // namespace c2link
