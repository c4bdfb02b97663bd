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

#include "c2link/scenario.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>

namespace c2link {

inline constexpr int kSchemaVersion = 1;

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string sweep_csv(const SweepResult& result);
std::string sweep_json(const SweepResult& result);
std::string region_csv(const OperatingRegion& region);
std::string region_json(const OperatingRegion& region);

/// Rate rows (highest first) by distance columns, one short code per cell.
std::string region_table(const OperatingRegion& region);

std::string link_budget_text(const LinkBudget& budget);
std::string link_budget_json(const LinkBudget& budget);

/// Writes to a sibling temporary file, then renames over `path`.
/// Throws IoError if the parent directory is missing or the write fails.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

} // namespace c2link
