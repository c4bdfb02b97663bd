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

// Randomized path-budget instances, expressed twice: as library inputs and as
// discrete-event paths for des_oracle.hpp.

#include "des_oracle.hpp"

#include "c2link/e2e.hpp"

#include <random>
#include <string>

namespace oracle {

struct CompositionCase {
    std::vector<c2link::PathOutcome> outcomes; // library, one per path
    c2link::PathOutcome combined;
    std::vector<DesPath> des;
    std::string summary;
};

inline c2link::LinkStats stats(double eps, double d_t)
{
    return c2link::make_link_stats(eps, 1.0 - eps, 0.0, 1, d_t);
}

/// Error levels are large enough (1e-3 .. 0.3) that 1e6-1e7 trials resolve them.
inline CompositionCase make_case(std::uint64_t seed)
{
    std::mt19937_64 gen(seed * 7919 + 17);
    auto uni = [&](double a, double b) { return std::uniform_real_distribution<double>(a, b)(gen); };
    auto logu = [&](double a, double b) { return std::exp(uni(std::log(a), std::log(b))); };
    auto pick = [&](int a, int b) { return std::uniform_int_distribution<int>(a, b)(gen); };

    const c2link::QosTarget qos{50e-3, 1e-2};
    c2link::PathSpec spec;
    spec.backhaul = {uni(0.5e-3, 2e-3), logu(1e-3, 2e-2)};
    spec.source.spec = {1000.0, uni(0.1e-3, 0.5e-3), logu(1e-3, 1e-2)};
    spec.relay.spec = {100.0, uni(0.1e-3, 0.5e-3), logu(1e-3, 1e-2)};

    CompositionCase c;
    const int k = pick(1, 2);
    const int relays = pick(0, 2);
    const bool hap = pick(0, 1) == 1 || relays == 0;

    // DA2G
    {
        std::vector<c2link::LinkStats> br;
        DesPath p;
        p.fixed_delay_s = spec.backhaul.delay_s + spec.source.spec.delay_bound_s;
        p.loss_probs = {spec.backhaul.failure_prob, spec.source.spec.violation_prob};
        Stage s;
        for (int i = 0; i < k; ++i) {
            const double eps = logu(0.02, 0.3), d_t = uni(0.2e-3, 2e-3);
            br.push_back(stats(eps, d_t));
            s.branches.push_back({eps, d_t});
        }
        p.stages.push_back(s);
        c.outcomes.push_back(c2link::da2g_path(spec, br, qos));
        c.des.push_back(p);
    }
    for (int m = 0; m < relays; ++m) {
        const double e1 = logu(0.01, 0.2), t1 = uni(0.2e-3, 2e-3);
        const double e2 = logu(0.01, 0.2), t2 = uni(0.2e-3, 2e-3);
        c.outcomes.push_back(c2link::a2a_path(spec, stats(e1, t1), stats(e2, t2), qos));
        DesPath p;
        p.fixed_delay_s = spec.backhaul.delay_s + spec.source.spec.delay_bound_s + spec.relay.spec.delay_bound_s;
        p.loss_probs = {spec.backhaul.failure_prob, spec.source.spec.violation_prob, spec.relay.spec.violation_prob};
        p.stages = {Stage{{{e1, t1}}}, Stage{{{e2, t2}}}};
        c.des.push_back(p);
    }
    if (hap) {
        c2link::PathSpec hs = spec;
        hs.relay.spec = {10000.0, uni(0.1e-3, 0.5e-3), logu(1e-3, 1e-2)};
        hs.d_gh_m = uni(19000.0, 25000.0);
        hs.d_ha_m = uni(19000.0, 25000.0);
        const double e1 = logu(0.01, 0.2), t1 = uni(0.2e-3, 2e-3);
        const double e2 = logu(0.01, 0.2), t2 = uni(0.2e-3, 2e-3);
        c.outcomes.push_back(c2link::hap_path(hs, stats(e1, t1), stats(e2, t2), qos));
        DesPath p;
        p.fixed_delay_s = hs.backhaul.delay_s + hs.source.spec.delay_bound_s + hs.relay.spec.delay_bound_s
                          + (hs.d_gh_m + hs.d_ha_m) / 2.998e8;
        p.loss_probs = {hs.backhaul.failure_prob, hs.source.spec.violation_prob, hs.relay.spec.violation_prob};
        p.stages = {Stage{{{e1, t1}}}, Stage{{{e2, t2}}}};
        c.des.push_back(p);
    }
    c.combined = c2link::combine_paths(c.outcomes, qos);
    c.summary = "K=" + std::to_string(k) + " relays=" + std::to_string(relays) + (hap ? " +HAP" : "");
    return c;
}

/// Largest deviation, in standard errors, between the library and the simulation.
struct CaseCheck {
    double worst_sigma = 0.0;
    std::string worst_what;
};

inline CaseCheck compare(const CompositionCase& c, const DesResult& r)
{
    CaseCheck out;
    auto note = [&](double lib, double sim, double se, const std::string& what) {
        const double z = std::abs(lib - sim) / se;
        if (z > out.worst_sigma) {
            out.worst_sigma = z;
            out.worst_what = what;
        }
    };
    for (std::size_t i = 0; i < c.outcomes.size(); ++i) {
        note(c.outcomes[i].eps_e2e, r.path_loss[i], binomial_se(r.path_loss[i], r.trials), "eps path " + std::to_string(i));
        note(c.outcomes[i].d_e2e, r.path_delay[i], std::max(r.path_delay_se[i], 1e-15), "delay path " + std::to_string(i));
    }
    note(c.combined.eps_e2e, r.all_lost, binomial_se(r.all_lost, r.trials), "eps combined");
    note(c.combined.d_e2e, r.min_mean_delay, std::max(r.min_mean_delay_se, 1e-15), "delay combined");
    return out;
}

} // namespace oracle
