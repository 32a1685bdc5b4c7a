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

#include "airground/channel.hpp"
#include "airground/irs.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace airground {

enum class NodeRole : std::uint8_t { Uav, BaseStation, SensorNode, User };

std::string_view to_string(NodeRole r);

struct Node {
    std::string id;
    NodeRole role = NodeRole::SensorNode;
    Position3D position;

    friend bool operator==(const Node &, const Node &) = default;
};

/// Exponents of one link class. `nlos` is required only when some link of
/// the class can resolve to NLoS.
struct LinkClass {
    PathLossModel los;
    std::optional<PathLossModel> nlos;

    friend bool operator==(const LinkClass &, const LinkClass &) = default;
};

// Link-class names looked up by the two experiments.
namespace link_class {
inline constexpr const char *kDirect = "direct";     // UAV <-> sensor node
inline constexpr const char *kUavIrs = "uav_irs";    // UAV <-> surface
inline constexpr const char *kIrsNode = "irs_node";  // surface <-> sensor node
inline constexpr const char *kBsIrs = "bs_irs";      // base station <-> surface
inline constexpr const char *kIrsUser = "irs_user";  // surface <-> user
} // namespace link_class

struct TrajectoryConstraints {
    Position3D start;
    Position3D end;
    double fixed_altitude = 0.0;
    double v_max = 0.0;
    double slot_duration = 0.1;

    friend bool operator==(const TrajectoryConstraints &, const TrajectoryConstraints &) = default;

    double max_step() const { return v_max * slot_duration; }
};

struct SolverSettings {
    double softmin_temperature = 0.05; // bps/Hz
    int max_iterations = 200;
    double relative_tolerance = 1e-4;
    int line_search_backtracks = 30;
    double line_search_shrink = 0.5;

    friend bool operator==(const SolverSettings &, const SolverSettings &) = default;
};

struct TrajectoryExperiment {
    std::string uav_id = "UAV";
    TrajectoryConstraints constraints;
    double rate_target = 0.0; // bps/Hz
    double max_time = 60.0;   // s
    bool compare_without_irs = true;
    SolverSettings solver;

    friend bool operator==(const TrajectoryExperiment &, const TrajectoryExperiment &) = default;
};

enum class DeploymentStrategy : std::uint8_t { UserSideOnly, BsSideOnly, Hybrid };

std::string_view to_string(DeploymentStrategy s);

struct DeploymentExperiment {
    int n_budget = 0;
    std::string base_station;
    std::string aerial_surface;
    std::string terrestrial_surface;
    std::vector<std::string> users;
    std::vector<DeploymentStrategy> strategies{DeploymentStrategy::UserSideOnly,
                                               DeploymentStrategy::BsSideOnly,
                                               DeploymentStrategy::Hybrid};

    friend bool operator==(const DeploymentExperiment &, const DeploymentExperiment &) = default;
};

using Experiment = std::variant<TrajectoryExperiment, DeploymentExperiment>;

struct Scenario {
    std::string name;
    RadioParams radio;
    std::map<std::string, LinkClass> path_loss;
    std::vector<Node> nodes;
    std::vector<IrsSurface> surfaces;
    LinkStateRuleSet link_rules;
    Experiment experiment;

    friend bool operator==(const Scenario &, const Scenario &) = default;

    const Node &node(const std::string &id) const;
    const IrsSurface &surface(const std::string &id) const;
    IrsSurface &surface(const std::string &id);

    /// Configured rule for the pair, or the default (LoS from altitude 0).
    LinkStateRule rule(const std::string &a, const std::string &b) const;

    /// State of the a-b link; the aerial endpoint is the higher of the two.
    LinkState link_state(const std::string &a, const Position3D &pa, const std::string &b,
                         const Position3D &pb) const;

    /// Exponent for `cls` in `state`; throws ConfigError on a missing class
    /// or a missing NLoS exponent. Not defined for Blocked.
    PathLossModel model(const std::string &cls, LinkState state) const;

    std::vector<std::string> node_ids(NodeRole role) const;

    bool is_trajectory() const { return std::holds_alternative<TrajectoryExperiment>(experiment); }
    bool is_deployment() const { return std::holds_alternative<DeploymentExperiment>(experiment); }
    const TrajectoryExperiment &trajectory() const;
    const DeploymentExperiment &deployment() const;
};

/// Same scenario with every surface stripped of its elements.
Scenario without_irs(Scenario scenario);

} // namespace airground
