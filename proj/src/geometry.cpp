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

#include "c2link/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace c2link {

const char* to_string(NodeKind kind)
{
    switch (kind) {
    case NodeKind::GroundBs: return "ground_bs";
    case NodeKind::AerialVehicle: return "av";
    case NodeKind::Hap: return "hap";
    case NodeKind::GroundStation: return "ground_station";
    }
    return "?";
}

namespace {

constexpr double kRadToDeg = 180.0 / std::numbers::pi;

// Axial lattice coordinates (q, r) -> plane, with the q axis along +x.
void axial_to_xy(int q, int r, double isd, double& x, double& y)
{
    x = isd * (q + 0.5 * r);
    y = isd * r * std::numbers::sqrt3 / 2.0;
}

int hex_ring(int q, int r)
{
    return std::max({std::abs(q), std::abs(r), std::abs(q + r)});
}

} // namespace

std::vector<NodePose> build_hex_grid(const GridSpec& grid, double bs_height_m)
{
    if (grid.tiers < 0 || !(grid.isd_m > 0.0))
        throw std::invalid_argument("grid needs tiers >= 0 and isd > 0");

    struct Site {
        int ring;
        double angle;
        double x, y;
    };
    std::vector<Site> sites;
    for (int q = -grid.tiers; q <= grid.tiers; ++q) {
        for (int r = -grid.tiers; r <= grid.tiers; ++r) {
            const int ring = hex_ring(q, r);
            if (ring > grid.tiers)
                continue;
            Site s{ring, 0.0, 0.0, 0.0};
            axial_to_xy(q, r, grid.isd_m, s.x, s.y);
            s.angle = ring == 0 ? 0.0 : std::atan2(s.y, s.x);
            if (s.angle < -1e-12)
                s.angle += 2.0 * std::numbers::pi;
            sites.push_back(s);
        }
    }
    std::sort(sites.begin(), sites.end(), [](const Site& a, const Site& b) {
        if (a.ring != b.ring)
            return a.ring < b.ring;
        return a.angle < b.angle;
    });

    std::vector<NodePose> out;
    out.reserve(sites.size());
    for (const auto& s : sites)
        out.push_back(NodePose{static_cast<int>(out.size()), NodeKind::GroundBs, s.x, s.y, bs_height_m});
    return out;
}

bool inside_grid_footprint(double x, double y, const GridSpec& grid)
{
    // Fractional axial coordinates, then cube rounding to the nearest site.
    const double r_f = y / (grid.isd_m * std::numbers::sqrt3 / 2.0);
    const double q_f = x / grid.isd_m - 0.5 * r_f;
    const double s_f = -q_f - r_f;
    double q = std::round(q_f), r = std::round(r_f), s = std::round(s_f);
    const double dq = std::abs(q - q_f), dr = std::abs(r - r_f), ds = std::abs(s - s_f);
    if (dq > dr && dq > ds)
        q = -r - s;
    else if (dr > ds)
        r = -q - s;
    return hex_ring(static_cast<int>(q), static_cast<int>(r)) <= grid.tiers;
}

std::vector<NodePose> place_avs_uniform(int count, const GridSpec& grid, double altitude_m, Rng& rng, int first_id)
{
    if (count < 1)
        throw std::invalid_argument("place_avs_uniform: count must be >= 1");
    const double half = (grid.tiers + 1.0) * grid.isd_m;
    std::vector<NodePose> out;
    out.reserve(count);
    while (static_cast<int>(out.size()) < count) {
        const double x = (2.0 * rng.uniform() - 1.0) * half;
        const double y = (2.0 * rng.uniform() - 1.0) * half;
        if (!inside_grid_footprint(x, y, grid))
            continue;
        out.push_back(NodePose{first_id + static_cast<int>(out.size()), NodeKind::AerialVehicle, x, y, altitude_m});
    }
    return out;
}

double distance_2d(const NodePose& a, const NodePose& b)
{
    return std::hypot(a.x - b.x, a.y - b.y);
}

double distance_3d(const NodePose& a, const NodePose& b)
{
    return std::hypot(a.x - b.x, a.y - b.y, a.altitude - b.altitude);
}

double elevation_angle_deg(const NodePose& from, const NodePose& to)
{
    const double horizontal = distance_2d(from, to);
    const double dz = to.altitude - from.altitude;
    if (horizontal == 0.0 && dz == 0.0)
        throw std::invalid_argument("elevation angle undefined for coincident poses");
    return std::atan2(dz, horizontal) * kRadToDeg;
}

double zenith_angle_deg(const NodePose& bs, const NodePose& av)
{
    return 90.0 - elevation_angle_deg(bs, av);
}

double off_boresight_deg(const NodePose& apex, const NodePose& boresight, const NodePose& target)
{
    const double ux = boresight.x - apex.x, uy = boresight.y - apex.y, uz = boresight.altitude - apex.altitude;
    const double vx = target.x - apex.x, vy = target.y - apex.y, vz = target.altitude - apex.altitude;
    const double cross = std::hypot(uy * vz - uz * vy, uz * vx - ux * vz, ux * vy - uy * vx);
    const double dot = ux * vx + uy * vy + uz * vz;
    if (cross == 0.0 && dot == 0.0)
        throw std::invalid_argument("off-boresight angle undefined for coincident poses");
    return std::atan2(cross, dot) * kRadToDeg;
}

const NodePose& serving_bs(const NodePose& av, std::span<const NodePose> grid)
{
    if (grid.empty())
        throw std::invalid_argument("serving_bs: empty grid");
    const NodePose* best = &grid.front();
    double best_d = distance_2d(av, *best);
    for (const auto& bs : grid.subspan(1)) {
        const double d = distance_2d(av, bs);
        if (d < best_d || (d == best_d && bs.id < best->id)) {
            best = &bs;
            best_d = d;
        }
    }
    return *best;
}

} // namespace c2link
