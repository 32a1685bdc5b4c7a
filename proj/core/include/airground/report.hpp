// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The airground Authors
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

#pragma once

#include "airground/deployment.hpp"
#include "airground/scenario.hpp"
#include "airground/trajectory.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

namespace airground {

std::string tool_version();

/// Hex SHA-256 of the canonical scenario rendering.
std::string scenario_digest(const Scenario &scenario);

struct LabeledMission {
    std::string label; // "irs" or "no_irs"
    MissionResult mission;
};

struct ResultBundle {
    std::string scenario_digest;
    std::string tool_version;
    double wall_time = 0.0;
    std::variant<std::vector<LabeledMission>, std::vector<DeploymentResult>> result;
    std::vector<std::filesystem::path> files;

    /// True if any mission failed to reach its rate target within max_time.
    bool infeasible() const;
};

struct RunOptions {
    std::filesystem::path out_dir = "out";
    bool write_files = true;
    std::vector<DeploymentStrategy> strategies; // empty: the scenario's list
    unsigned threads = 1;
};

/// Columns: slot, t_seconds, x, y, z, then tau_<node> per sensor node. One
/// row per waypoint; the landing waypoint carries zero fractions.
std::string trajectory_csv(const MissionResult &mission);

/// Columns: strategy, n1, n2, altitude, rate_<user> per user, min_rate.
std::string deployment_csv(const Scenario &scenario, const std::vector<DeploymentResult> &results);

nlohmann::json summary_json(const Scenario &scenario, const ResultBundle &bundle);

ResultBundle run_trajectory(const Scenario &scenario, const RunOptions &options);
ResultBundle run_deployment(const Scenario &scenario, const RunOptions &options);

} // namespace airground
