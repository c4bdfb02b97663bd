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

#include "c2link/e2e.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace c2link {

void BackhaulSpec::validate() const
{
    if (!(delay_s >= 0.0))
        throw std::invalid_argument("backhaul delay must be non-negative");
    if (!(failure_prob >= 0.0 && failure_prob < 1.0))
        throw std::domain_error("backhaul failure probability must lie in [0, 1)");
}

void QosTarget::validate() const
{
    if (!(d_max_s > 0.0))
        throw std::invalid_argument("delay threshold must be positive");
    if (!(eps_th > 0.0 && eps_th <= 1.0))
        throw std::domain_error("packet loss target must lie in (0, 1]");
}

bool NodeQueue::feasible() const
{
    if (std::isinf(service_rate) && service_rate > 0.0)
        return true; // unconstrained node
    return queue_feasible(service_rate, spec);
}

const char* to_string(PathKind kind)
{
    switch (kind) {
    case PathKind::DA2G: return "DA2G";
    case PathKind::A2A: return "A2A";
    case PathKind::HAP: return "HAP";
    case PathKind::Combined: return "combined";
    }
    return "?";
}

double union_error(std::span<const double> eps)
{
    double log_success = 0.0;
    for (double e : eps) {
        if (!(e >= 0.0 && e <= 1.0))
            throw std::domain_error("error probability outside [0, 1]");
        log_success += std::log1p(-e);
    }
    return -std::expm1(log_success);
}

bool meets(const QosTarget& qos, double eps, double delay_s)
{
    return delay_s <= qos.d_max_s && eps <= qos.eps_th;
}

namespace {

PathOutcome finish(PathKind kind, std::vector<BreakdownTerm> delays, std::vector<BreakdownTerm> errors, bool queue_ok,
                   double std_error, const QosTarget& qos)
{
    PathOutcome out;
    out.kind = kind;
    out.eps_std_error = std_error;
    std::vector<double> eps;
    eps.reserve(errors.size());
    for (const auto& t : errors)
        eps.push_back(t.value);
    out.eps_e2e = union_error(eps);
    for (const auto& t : delays)
        out.d_e2e += t.value;
    out.delays = std::move(delays);
    out.errors = std::move(errors);
    out.queue_ok = queue_ok;
    out.feasible = queue_ok && meets(qos, out.eps_e2e, out.d_e2e);
    return out;
}

} // namespace

PathOutcome da2g_path(const PathSpec& spec, std::span<const LinkStats> branches, const QosTarget& qos)
{
    const auto radio = freq_diversity(branches);
    double rel = 0.0;
    for (const auto& b : branches)
        if (b.eps_t_bar > 0.0)
            rel += (b.std_error / b.eps_t_bar) * (b.std_error / b.eps_t_bar);
    return finish(PathKind::DA2G,
                  {{"backhaul", spec.backhaul.delay_s},
                   {"queue_bs", spec.source.spec.delay_bound_s},
                   {"tx_ga", radio.delay_s}},
                  {{"backhaul", spec.backhaul.failure_prob},
                   {"queue_bs", spec.source.spec.violation_prob},
                   {"tx_ga", radio.eps}},
                  spec.source.feasible(), radio.eps * std::sqrt(rel), qos);
}

PathOutcome a2a_path(const PathSpec& spec, const LinkStats& ga, const LinkStats& aa, const QosTarget& qos)
{
    return finish(PathKind::A2A,
                  {{"backhaul", spec.backhaul.delay_s},
                   {"queue_bs", spec.source.spec.delay_bound_s},
                   {"tx_ga", ga.d_t_bar},
                   {"queue_relay", spec.relay.spec.delay_bound_s},
                   {"tx_aa", aa.d_t_bar}},
                  {{"backhaul", spec.backhaul.failure_prob},
                   {"queue_bs", spec.source.spec.violation_prob},
                   {"tx_ga", ga.eps_t_bar},
                   {"queue_relay", spec.relay.spec.violation_prob},
                   {"tx_aa", aa.eps_t_bar}},
                  spec.source.feasible() && spec.relay.feasible(), std::hypot(ga.std_error, aa.std_error), qos);
}

PathOutcome hap_path(const PathSpec& spec, const LinkStats& gh, const LinkStats& ha, const QosTarget& qos)
{
    if (!(spec.d_gh_m >= 0.0 && spec.d_ha_m >= 0.0))
        throw std::invalid_argument("hap_path: propagation distances must be non-negative");
    return finish(PathKind::HAP,
                  {{"backhaul", spec.backhaul.delay_s},
                   {"queue_gs", spec.source.spec.delay_bound_s},
                   {"tx_gh", gh.d_t_bar},
                   {"prop_gh", spec.d_gh_m / kSpeedOfLight},
                   {"queue_hap", spec.relay.spec.delay_bound_s},
                   {"tx_ha", ha.d_t_bar},
                   {"prop_ha", spec.d_ha_m / kSpeedOfLight}},
                  {{"backhaul", spec.backhaul.failure_prob},
                   {"queue_gs", spec.source.spec.violation_prob},
                   {"tx_gh", gh.eps_t_bar},
                   {"queue_hap", spec.relay.spec.violation_prob},
                   {"tx_ha", ha.eps_t_bar}},
                  spec.source.feasible() && spec.relay.feasible(), std::hypot(gh.std_error, ha.std_error), qos);
}

PathOutcome combine_paths(std::span<const PathOutcome> outcomes, const QosTarget& qos)
{
    if (outcomes.empty())
        throw std::invalid_argument("combine_paths: no paths");
    if (outcomes.size() == 1) {
        PathOutcome out = outcomes.front();
        out.feasible = out.queue_ok && meets(qos, out.eps_e2e, out.d_e2e);
        return out;
    }

    PathOutcome out;
    out.kind = PathKind::Combined;
    out.eps_e2e = 1.0;
    out.d_e2e = std::numeric_limits<double>::infinity();
    out.queue_ok = false;
    const PathOutcome* fastest = nullptr;
    double rel = 0.0;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        const auto& p = outcomes[i];
        out.errors.push_back({std::string("path") + std::to_string(i) + "_" + to_string(p.kind), p.queue_ok ? p.eps_e2e : 1.0});
        if (!p.queue_ok)
            continue;
        out.queue_ok = true;
        out.eps_e2e *= p.eps_e2e;
        if (p.eps_e2e > 0.0)
            rel += (p.eps_std_error / p.eps_e2e) * (p.eps_std_error / p.eps_e2e);
        if (p.d_e2e < out.d_e2e) {
            out.d_e2e = p.d_e2e;
            fastest = &p;
        }
    }
    if (fastest)
        out.delays = fastest->delays;
    out.eps_std_error = out.queue_ok ? out.eps_e2e * std::sqrt(rel) : 0.0;
    out.feasible = out.queue_ok && meets(qos, out.eps_e2e, out.d_e2e);
    return out;
}

std::string Combination::label() const
{
    std::string s;
    auto add = [&s](const std::string& part) {
        if (!s.empty())
            s += " + ";
        s += part;
    };
    if (da2g)
        add("DA2G");
    if (relays > 0)
        add(relays == 1 && !da2g && !hap ? std::string("A2A") : std::to_string(relays) + "-A2A");
    if (hap)
        add("HAP");
    if (s.empty())
        throw std::invalid_argument("empty path combination");
    return s;
}

std::vector<Combination> canonical_combinations(int max_relays)
{
    if (max_relays < 0)
        throw std::invalid_argument("max_relays must be >= 0");
    std::vector<Combination> list;
    for (bool hap : {false, true})
        for (int m = 0; m <= max_relays; ++m)
            list.push_back({true, m, hap});
    return list;
}

std::vector<Combination> sweep_combinations(int max_relays)
{
    auto canon = canonical_combinations(max_relays);
    std::vector<Combination> list{canon.front()};
    if (max_relays >= 1)
        list.push_back({false, 1, false});
    list.push_back({false, 0, true});
    list.insert(list.end(), canon.begin() + 1, canon.end());
    return list;
}

PathOutcome evaluate_combination(const CandidatePaths& paths, const Combination& combo, const QosTarget& qos)
{
    std::vector<PathOutcome> chosen;
    if (combo.da2g)
        chosen.push_back(paths.da2g);
    if (combo.relays < 0 || static_cast<std::size_t>(combo.relays) > paths.a2a.size())
        throw std::invalid_argument("combination needs more relays than available");
    chosen.insert(chosen.end(), paths.a2a.begin(), paths.a2a.begin() + combo.relays);
    if (combo.hap) {
        if (!paths.hap)
            throw std::invalid_argument("combination needs a HAP path");
        chosen.push_back(*paths.hap);
    }
    return combine_paths(chosen, qos);
}

std::string min_feasible_combination(std::span<const CombinationOutcome> ordered)
{
    for (const auto& c : ordered)
        if (c.outcome.feasible)
            return c.combo.label();
    return "none";
}

std::string min_feasible_combination(const CandidatePaths& paths, const QosTarget& qos, int max_relays)
{
    std::vector<CombinationOutcome> all;
    for (const auto& c : canonical_combinations(max_relays))
        all.push_back({c, evaluate_combination(paths, c, qos)});
    return min_feasible_combination(all);
}

} // namespace c2link
