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

#include "c2link/queueing.hpp"

#include <cmath>
#include <stdexcept>

namespace c2link {

void QueueSpec::validate() const
{
    if (!(arrival_rate > 0.0))
        throw std::invalid_argument("queue: arrival rate must be positive");
    if (!(delay_bound_s > 0.0))
        throw std::invalid_argument("queue: delay bound must be positive");
    if (!(violation_prob > 0.0 && violation_prob < 1.0))
        throw std::domain_error("queue: violation probability must lie in (0, 1)");
}

double effective_bandwidth(const QueueSpec& spec)
{
    if (!(spec.violation_prob < 1.0))
        throw std::domain_error("effective_bandwidth: violation probability must be < 1");
    spec.validate();
    const double l = -std::log(spec.violation_prob);
    return l / (spec.delay_bound_s * std::log1p(l / (spec.arrival_rate * spec.delay_bound_s)));
}

bool queue_feasible(double service_rate, const QueueSpec& spec)
{
    if (!(service_rate >= 0.0))
        throw std::invalid_argument("queue_feasible: service rate must be non-negative");
    return service_rate >= effective_bandwidth(spec);
}

} // namespace c2link
