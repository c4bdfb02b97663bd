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

#include <span>
#include <vector>

namespace c2link {

enum class NodeKind { GroundBs, AerialVehicle, Hap, GroundStation };

const char* to_string(NodeKind kind);

struct NodePose {
    int id = 0;
    NodeKind kind = NodeKind::GroundBs;
    double x = 0.0;        // m
    double y = 0.0;        // m
    double altitude = 0.0; // m
};

/// Hexagonal macro-cell layout: one center site plus `tiers` rings.
struct GridSpec {
    int tiers = 3;
    double isd_m = 500.0;

    [[nodiscard]] int cell_count() const { return 1 + 3 * tiers * (tiers + 1); }
};

/// Sites on a hexagonal lattice centered at the origin. Site 0 is the center;
/// the rest follow ring by ring, counter-clockwise from +x. One lattice axis
/// points along +x, so (isd, 0) is a site.
std::vector<NodePose> build_hex_grid(const GridSpec& grid, double bs_height_m);

/// True when (x, y) lies in the union of the grid's hexagonal cells.
bool inside_grid_footprint(double x, double y, const GridSpec& grid);

/// `count` AVs uniform over the cell union at a fixed altitude. Ids start at first_id.
std::vector<NodePose> place_avs_uniform(int count, const GridSpec& grid, double altitude_m, Rng& rng,
                                        int first_id = 0);

double distance_2d(const NodePose& a, const NodePose& b);
double distance_3d(const NodePose& a, const NodePose& b);

/// Angle above the local horizontal at `from` towards `to`, in [-90, 90].
/// Throws std::invalid_argument for coincident poses.
double elevation_angle_deg(const NodePose& from, const NodePose& to);

/// Angle between the upward vertical at `bs` and the direction to `av`.
double zenith_angle_deg(const NodePose& bs, const NodePose& av);

/// Angle at `apex` between the directions to `boresight` and to `target`.
double off_boresight_deg(const NodePose& apex, const NodePose& boresight, const NodePose& target);

/// Nearest site by 2D distance; ties go to the lowest id.
const NodePose& serving_bs(const NodePose& av, std::span<const NodePose> grid);

} // namespace c2link
