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

#include "c2link/config.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace c2link::cli {

enum ExitCode : int {
    kOk = 0,
    kValidationFailed = 1,
    kUsageError = 2,
    kIoError = 3,
};

struct Options {
    std::string command;
    std::string config;                 // path or preset name
    std::optional<std::uint64_t> seed;
    std::string out;                    // empty: standard output
    std::string format = "csv";
    int threads = 0;                    // 0: OpenMP default
    bool quiet = false;
    std::vector<std::string> overrides; // key=value

    std::optional<std::string> rates_kbps;      // sweep
    std::optional<std::string> r_edges_m;       // region
    std::optional<std::string> rate_edges_kbps; // region
    std::string link = "g2a";                   // link-budget
    double distance_m = 150.0;
    double rate_kbps = 100.0;
};

/// Config file lookup: the path itself, then $C2LINK_CONFIG_DIR/<name>[.ini].
/// With no name, $C2LINK_CONFIG_DIR/default.ini if present, else built-in defaults.
ScenarioConfig resolve_config(const Options& opts);

int cmd_sweep(const Options& opts, std::ostream& out, std::ostream& err);
int cmd_region(const Options& opts, std::ostream& out, std::ostream& err);
int cmd_link_budget(const Options& opts, std::ostream& out, std::ostream& err);
int cmd_validate(const Options& opts, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches. Never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace c2link::cli
