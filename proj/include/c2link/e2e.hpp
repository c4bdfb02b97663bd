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

#include "c2link/link.hpp"
#include "c2link/queueing.hpp"

#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace c2link {

inline constexpr double kSpeedOfLight = 2.998e8; // m/s

struct BackhaulSpec {
    double delay_s = 1e-3;
    double failure_prob = 1e-6;

    void validate() const;
};

struct QosTarget {
    double d_max_s = 10e-3;
    double eps_th = 1e-5;

    void validate() const;
};

/// A transmitting node's queue and the service rate it can offer.
struct NodeQueue {
    QueueSpec spec;
    double service_rate = std::numeric_limits<double>::infinity(); // packets/s

    [[nodiscard]] bool feasible() const;
};

/// Everything a path needs besides the per-link statistics.
struct PathSpec {
    BackhaulSpec backhaul;
    NodeQueue source;   // ground BS (DA2G, A2A) or ground station (HAP)
    NodeQueue relay;    // relay AV (A2A) or HAP; unused for DA2G
    double d_gh_m = 0.0; // HAP only
    double d_ha_m = 0.0; // HAP only
};

enum class PathKind { DA2G, A2A, HAP, Combined };

const char* to_string(PathKind kind);

struct BreakdownTerm {
    std::string name;
    double value;
};

struct PathOutcome {
    PathKind kind = PathKind::DA2G;
    double eps_e2e = 0.0;
    double d_e2e = 0.0;
    double eps_std_error = 0.0; // Monte Carlo, first order
    bool queue_ok = true;
    bool feasible = false;
    std::vector<BreakdownTerm> delays; // seconds, summing to d_e2e
    std::vector<BreakdownTerm> errors; // component probabilities
};

/// 1 - prod(1 - eps_i), accurate for tiny terms.
double union_error(std::span<const double> eps);

bool meets(const QosTarget& qos, double eps, double delay_s);

PathOutcome da2g_path(const PathSpec& spec, std::span<const LinkStats> branches, const QosTarget& qos);
PathOutcome a2a_path(const PathSpec& spec, const LinkStats& ga, const LinkStats& aa, const QosTarget& qos);
PathOutcome hap_path(const PathSpec& spec, const LinkStats& gh, const LinkStats& ha, const QosTarget& qos);

/// Cloning over parallel paths: errors multiply, the earliest copy wins.
/// Paths whose queue cannot be served deliver nothing.
PathOutcome combine_paths(std::span<const PathOutcome> outcomes, const QosTarget& qos);

// ---------- Combination search ----------

struct Combination {
    bool da2g = true;
    int relays = 0;
    bool hap = false;

    [[nodiscard]] std::string label() const;
    [[nodiscard]] int path_count() const { return (da2g ? 1 : 0) + relays + (hap ? 1 : 0); }
    friend bool operator==(const Combination&, const Combination&) = default;
};

/// DA2G-anchored combinations in preference order: relays first, HAP last.
std::vector<Combination> canonical_combinations(int max_relays = 3);

/// Every combination reported by rate sweeps: the single paths, then the canonical list.
std::vector<Combination> sweep_combinations(int max_relays = 3);

/// Per-path outcomes of one topology; a2a holds one outcome per relay, nearest relay first.
struct CandidatePaths {
    PathOutcome da2g;
    std::vector<PathOutcome> a2a;
    std::optional<PathOutcome> hap;
};

PathOutcome evaluate_combination(const CandidatePaths& paths, const Combination& combo, const QosTarget& qos);

struct CombinationOutcome {
    Combination combo;
    PathOutcome outcome;
};

/// First feasible label in the given order, or "none".
std::string min_feasible_combination(std::span<const CombinationOutcome> ordered);

std::string min_feasible_combination(const CandidatePaths& paths, const QosTarget& qos, int max_relays = 3);

} // namespace c2link
