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

#include "airground/scenario.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace airground {

/// Element split between the BS-side aerial surface (n1) and the user-side
/// terrestrial surface (n2), the aerial surface's altitude, and which
/// surface relays each user (nullopt: unserved).
struct DeploymentPlan {
    int n1 = 0;
    int n2 = 0;
    double uirs_altitude = 0.0;
    std::map<std::string, std::optional<std::string>> assignment;

    friend bool operator==(const DeploymentPlan &, const DeploymentPlan &) = default;
};

struct DeploymentResult {
    DeploymentPlan plan;
    std::vector<double> per_user_rates; // in DeploymentExperiment::users order
    double min_rate = 0.0;
    DeploymentStrategy strategy = DeploymentStrategy::Hybrid;
};

/// Throws DomainError if a user is assigned to a surface that cannot serve
/// it (outside terrestrial coverage, or not LoS to the aerial surface at
/// the plan's altitude) or if n1 + n2 exceeds the budget.
void validate_plan(const Scenario &scenario, const DeploymentPlan &plan);

/// Rate of one user relayed BS -> surface -> user in its own 1/K share of
/// equal orthogonal slots. The direct BS-user link is blocked, so a user
/// without a serving surface gets exactly zero.
double user_rate(const Scenario &scenario, const DeploymentPlan &plan, const std::string &user_id);

/// Rate `user_id` would get from `surface_id` under the given split and
/// altitude, or nullopt when that surface cannot serve the user.
std::optional<double> candidate_rate(const Scenario &scenario, int n1, int n2, double altitude,
                                     const std::string &user_id, const std::string &surface_id);

/// Best altitude and assignment for a fixed split: each candidate altitude
/// (0 and every aerial LoS threshold) is tried, each user takes the
/// covering surface with the higher rate (ties to the terrestrial one),
/// and the highest min-rate wins, lower altitude first on ties.
DeploymentResult evaluate_split(const Scenario &scenario, int n1, int n2);

DeploymentResult evaluate_strategy(const Scenario &scenario, DeploymentStrategy strategy, int n_budget);

/// Full enumeration of n1 in [0, n_budget]; ties go to the smallest n1.
/// `threads` > 1 splits the range across workers; the reduction happens
/// after all splits are scored, so the result does not depend on it.
DeploymentResult exhaustive_allocate(const Scenario &scenario, int n_budget, unsigned threads = 1);

/// Min-rate of the hybrid rule for every n1 in [0, n_budget].
std::vector<double> allocation_profile(const Scenario &scenario, int n_budget);

} // namespace airground
