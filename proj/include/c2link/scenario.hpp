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

#include "c2link/conditional.hpp"
#include "c2link/config.hpp"
#include "c2link/e2e.hpp"
#include "c2link/geometry.hpp"
#include "c2link/link.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace c2link {

/// Node placement for one realization.
struct Topology {
    std::vector<NodePose> bs;
    NodePose destination;
    std::vector<NodePose> background;   // other AVs
    std::vector<std::size_t> relays;    // indices into background, nearest to the destination first
    NodePose hap;
    NodePose ground_station;
};

/// Link models derived from a topology.
struct ScenarioLinks {
    LinkModel g2a;                    // serving BS -> destination
    std::vector<LinkModel> relay_g2a; // serving BS of relay m -> relay m
    std::vector<LinkModel> a2a;       // relay m -> destination
    LinkModel g2h;                    // ground station -> HAP
    LinkModel h2a;                    // HAP -> destination
    double d_gh_m = 0.0;
    double d_ha_m = 0.0;
};

struct Instance {
    Topology topology;
    ScenarioLinks links;
};

/// Builds topology `topology_index` with the destination at (r_ga, 0, h_a).
/// The placement depends on (seed, topology_index) only, so every distance bin
/// sees the same background AVs.
Instance instantiate(const ScenarioConfig& config, std::uint64_t seed, double r_ga_m, int topology_index = 0);

/// G2A link from `bs` to `av`, interferers taken from the remaining sites.
LinkModel make_g2a_link(const ScenarioConfig& config, const NodePose& bs, const NodePose& av,
                        std::span<const NodePose> sites);

/// One branch of path combination statistics, averaged over topologies.
struct CombinationStats {
    Combination combo;
    std::string label;
    double eps_e2e = 0.0;
    double d_e2e = 0.0;
    double eps_std_error = 0.0;
    double d_std_error = 0.0;
    bool feasible = false;
    std::vector<BreakdownTerm> delays; // mean delay breakdown of the fastest path
};

struct SweepPoint {
    double rate_bps = 0.0;
    double d_t_s = 0.0;
    std::vector<CombinationStats> combos;
};

struct RunMetadata {
    std::uint64_t seed = 0;
    std::string config_hash;
    std::int64_t n_samples = 0;
    int topologies = 0;
    std::string estimator;
    std::string interference_mode;
    std::string relay_selection = "nearest";
};

struct SweepResult {
    RunMetadata meta;
    double r_ga_m = 0.0;
    std::vector<SweepPoint> points;
};

struct RegionCell {
    double r_lo_m = 0.0, r_hi_m = 0.0, r_eval_m = 0.0;
    double rate_lo_bps = 0.0, rate_hi_bps = 0.0, rate_eval_bps = 0.0;
    std::string label;
    int combo_index = -1; // position in the canonical list, -1 for "none"
    std::vector<CombinationStats> combos;
};

/// Distance bins are evaluated at their centers, rate bins at their upper edge.
struct OperatingRegion {
    RunMetadata meta;
    std::vector<double> r_edges_m;
    std::vector<double> rate_edges_bps;
    std::vector<RegionCell> cells; // r-major: cell(i, j) = cells[i * rate_bins + j]

    [[nodiscard]] std::size_t r_bins() const { return r_edges_m.size() - 1; }
    [[nodiscard]] std::size_t rate_bins() const { return rate_edges_bps.size() - 1; }
    [[nodiscard]] const RegionCell& cell(std::size_t r_bin, std::size_t rate_bin) const;
};

using ProgressFn = std::function<void(const std::string&)>;

/// Averages every listed combination over the configured topologies at one
/// distance, for each rate. Result is indexed [rate][combination].
std::vector<std::vector<CombinationStats>> evaluate_distance(const ScenarioConfig& config, std::uint64_t seed,
                                                             double r_ga_m, std::span<const double> rates_bps,
                                                             std::span<const Combination> combos,
                                                             ConditionalTableCache& cache);

SweepResult run_rate_sweep(const ScenarioConfig& config, std::span<const double> rates_bps,
                           const ProgressFn& progress = {});

OperatingRegion run_operating_region(const ScenarioConfig& config, std::span<const double> r_edges_m,
                                     std::span<const double> rate_edges_bps, const ProgressFn& progress = {});

/// Single-link debug view.
struct LinkBudget {
    LinkKind kind = LinkKind::G2A;
    double distance_2d_m = 0.0;
    double distance_3d_m = 0.0;
    double elevation_deg = 0.0;
    std::optional<double> p_los;
    double path_loss_db = 0.0;
    double tx_gain_db = 0.0;
    double rx_gain_db = 0.0;
    double k_factor_db = 0.0;
    double shadow_sigma_db = 0.0;
    double rx_power_dbm = 0.0;
    double noise_dbm = 0.0;
    double mean_snr_db = 0.0;
    double mean_sinr_db = 0.0; // interference at its expected level
    int interferers = 0;
    double rate_bps = 0.0;
    double d_t_s = 0.0;
    double propagation_s = 0.0;
    LinkStats stats;
};

/// `distance_m` is the horizontal offset: BS to AV (g2a), AV to AV (a2a),
/// ground station to HAP (g2h), HAP to AV (h2a).
LinkBudget link_budget(const ScenarioConfig& config, LinkKind kind, double distance_m, double rate_bps,
                       std::uint64_t seed);

LinkKind parse_link_kind(const std::string& name);

RunMetadata make_metadata(const ScenarioConfig& config);

} // namespace c2link
