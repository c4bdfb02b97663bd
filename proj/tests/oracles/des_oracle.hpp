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

// Brute-force discrete-event check of the path budgets. Each trial draws
// every component failure as an independent Bernoulli event and every radio
// hop's ARQ attempt count as a geometric variable, then records whether all
// cloned copies were lost and each path's delay. Nothing here calls the
// library's composition code.

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace oracle {

struct Hop {
    double eps;  // mean decoding error per attempt
    double d_t;  // single-attempt time, s
};

/// Branches of one radio stage (frequency diversity: lost only if all branches fail).
struct Stage {
    std::vector<Hop> branches;
};

/// A path: fixed delay, independent loss events, and radio stages in series.
struct DesPath {
    double fixed_delay_s = 0.0;
    std::vector<double> loss_probs; // backhaul, queues
    std::vector<Stage> stages;
};

struct DesResult {
    std::int64_t trials = 0;
    std::vector<double> path_loss;      // empirical loss per path
    std::vector<double> path_delay;     // empirical mean delay per path
    std::vector<double> path_delay_se;  // standard error of that mean
    double all_lost = 0.0;              // empirical loss of the cloned combination
    double min_mean_delay = 0.0;        // earliest path by mean delay
    double min_mean_delay_se = 0.0;
};

// Delay statistics follow the averaged reading of the budgets: each branch's
// mean ARQ delay is estimated on its own, a diversity stage takes the
// smallest branch mean, and cloned paths are compared by mean delay.
inline DesResult simulate(const std::vector<DesPath>& paths, std::int64_t trials, std::uint64_t seed)
{
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const std::size_t n = paths.size();
    std::vector<std::int64_t> lost(n, 0);
    // [path][stage][branch] sums of the ARQ delay and its square
    std::vector<std::vector<std::vector<double>>> dsum(n), dsq(n);
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& s : paths[i].stages) {
            dsum[i].emplace_back(s.branches.size(), 0.0);
            dsq[i].emplace_back(s.branches.size(), 0.0);
        }
    std::int64_t all_lost = 0;

    // geometric attempts via inversion: attempts = 1 + floor(ln U / ln eps)
    auto attempts = [&](double eps) {
        if (eps <= 0.0)
            return 1.0;
        return 1.0 + std::floor(std::log(u(gen)) / std::log(eps));
    };

    for (std::int64_t t = 0; t < trials; ++t) {
        bool every = true;
        for (std::size_t i = 0; i < n; ++i) {
            const auto& p = paths[i];
            bool ok = true;
            for (double q : p.loss_probs)
                if (u(gen) < q)
                    ok = false;
            for (std::size_t s = 0; s < p.stages.size(); ++s) {
                bool any = false;
                for (std::size_t b = 0; b < p.stages[s].branches.size(); ++b) {
                    const auto& h = p.stages[s].branches[b];
                    if (u(gen) >= h.eps)
                        any = true;
                    const double d = h.d_t * attempts(h.eps);
                    dsum[i][s][b] += d;
                    dsq[i][s][b] += d * d;
                }
                if (!any)
                    ok = false;
            }
            if (!ok)
                ++lost[i];
            else
                every = false;
        }
        if (every)
            ++all_lost;
    }

    DesResult r;
    r.trials = trials;
    const double nt = static_cast<double>(trials);
    std::size_t best = 0;
    for (std::size_t i = 0; i < n; ++i) {
        r.path_loss.push_back(static_cast<double>(lost[i]) / nt);
        double mean = paths[i].fixed_delay_s, var = 0.0;
        for (std::size_t s = 0; s < dsum[i].size(); ++s) {
            double bm = std::numeric_limits<double>::infinity(), bv = 0.0;
            for (std::size_t b = 0; b < dsum[i][s].size(); ++b) {
                const double m = dsum[i][s][b] / nt;
                if (m < bm) {
                    bm = m;
                    bv = std::max(0.0, dsq[i][s][b] / nt - m * m) / nt;
                }
            }
            mean += bm;
            var += bv;
        }
        r.path_delay.push_back(mean);
        r.path_delay_se.push_back(std::sqrt(var));
        if (mean < r.path_delay[best])
            best = i;
    }
    r.all_lost = static_cast<double>(all_lost) / nt;
    r.min_mean_delay = r.path_delay[best];
    r.min_mean_delay_se = r.path_delay_se[best];
    return r;
}

/// Binomial standard error of an empirical probability.
inline double binomial_se(double p, std::int64_t n)
{
    return std::sqrt(std::max(p * (1.0 - p), 1.0 / static_cast<double>(n)) / static_cast<double>(n));
}

} // namespace oracle
