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

#include <array>
#include <string>
#include <variant>

namespace c2link {

enum class LinkKind { G2A, A2A, G2H, H2A };

const char* to_string(LinkKind kind);

/// How the LoS/NLoS G2A path losses are averaged.
enum class PathLossMixture {
    Decibel, // probability-weighted sum of dB values
    Linear,  // probability-weighted sum of linear losses
};

/// Clutter loss per 10-degree elevation bin: [0,10), [10,20), ..., [80,90].
using ClutterTable = std::array<double, 9>;

struct Environment {
    double q1 = 0.3;
    double q2 = 500.0;
    double q3 = 20.0; // m
    double sf_sigma_los_db = 4.0;
    double sf_sigma_nlos_db = 6.0;
    ClutterTable clutter_loss_db{};
    PathLossMixture mixture = PathLossMixture::Decibel;
    bool g2a_shadowing = false;
};

// ---------- Antennas ----------

struct OmniAntenna {
    double gain = 1.0; // linear
};

/// Vertical N-element half-wavelength ULA with fixed electrical downtilt.
struct UlaAntenna {
    int elements = 8;
    double element_max_gain = 6.309573444801933; // 8 dBi
    double downtilt_deg = 102.0;                 // zenith angle of the main lobe
};

/// Circular-aperture reflector.
struct ReflectorAntenna {
    double max_gain = 1584.893192461114; // 32 dBi
    double aperture_radius_wavelengths = 10.0;
};

using AntennaSpec = std::variant<OmniAntenna, UlaAntenna, ReflectorAntenna>;

/// ULA array factor alone; peaks at N on the tilt direction.
double ula_array_factor(double zenith_deg, int elements, double downtilt_deg);

/// Element pattern times array factor, linear.
double ula_gain(double zenith_deg, const UlaAntenna& spec);

/// Normalized reflector pattern 4 |J1(u)/u|^2, u = 2 pi a sin(theta); 1 on boresight.
double hap_pattern(double off_boresight_deg, double aperture_radius_wavelengths = 10.0);

double hap_gain(double off_boresight_deg, const ReflectorAntenna& spec);

/// Gain toward a direction. The angle is the zenith angle for a ULA and the
/// off-boresight angle for a reflector; omni ignores it.
double antenna_gain(const AntennaSpec& spec, double angle_deg);

// ---------- Rician K ----------

struct RiceRange {
    double k_min_db = 0.0;
    double k_max_db = 0.0;
};

struct RiceTable {
    RiceRange g2a{5.0, 12.0};
    RiceRange a2a{12.0, 12.0};
    RiceRange g2h{5.0, 15.0};
    RiceRange h2a{12.0, 15.0};

    [[nodiscard]] const RiceRange& operator[](LinkKind kind) const;
};

/// Elevation index in the nine 10-degree bins; 90 falls into the last one.
int elevation_bin(double elevation_deg);

/// K grows linearly with the elevation bin from k_min (bin 0) to k_max (bin 8).
double rice_k_db(LinkKind kind, double elevation_deg, const RiceTable& table);

// ---------- Path loss ----------

/// Urban LoS probability of a G2A link. Requires h_a != h_g and r_2d >= 0.
double p_los(double r_2d_m, double h_g_m, double h_a_m, const Environment& env);

double pl_g2a_los_db(double d_3d_m, double fc_ghz);
double pl_g2a_nlos_db(double d_3d_m, double h_a_m, double fc_ghz);

/// LoS/NLoS mixture at the given geometry (mixing rule from env.mixture).
double pl_avg_g2a_db(double r_2d_m, double h_g_m, double h_a_m, double fc_ghz, const Environment& env);

double fspl_db(double d_m, double fc_ghz);

double clutter_loss_db(double elevation_deg, const Environment& env);

/// FSPL + one shadow-fading draw (LoS sigma) + clutter loss.
double pl_g2h_db(double d_m, double fc_ghz, double elevation_deg, const Environment& env, Rng& rng);

// ---------- Channel power ----------

/// |h|^2 = g_tx g_rx / PL * w with w Rician of unit mean.
double channel_power_sample(double pl_db, double tx_gain, double rx_gain, double k_db, Rng& rng);

} // namespace c2link
