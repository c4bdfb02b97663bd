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

namespace c2link {

/// Poisson arrivals with a (delay bound, violation probability) requirement.
struct QueueSpec {
    double arrival_rate = 1000.0;   // packets/s
    double delay_bound_s = 0.3e-3;  // D_q^max
    double violation_prob = 1e-7;   // eps_q

    void validate() const;
};

/// Minimal constant service rate meeting the (delay bound, violation probability) pair, packets/s.
double effective_bandwidth(const QueueSpec& spec);

/// Service rate is sufficient (boundary inclusive).
bool queue_feasible(double service_rate, const QueueSpec& spec);

} // namespace c2link
