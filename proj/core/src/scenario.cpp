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

#include "airground/scenario.hpp"

#include "airground/errors.hpp"

#include <algorithm>

namespace airground {

std::string_view to_string(NodeRole r)
{
    switch (r) {
    case NodeRole::Uav:
        return "uav";
    case NodeRole::BaseStation:
        return "bs";
    case NodeRole::SensorNode:
        return "sensor";
    case NodeRole::User:
        return "user";
    }
    return "unknown";
}

std::string_view to_string(DeploymentStrategy s)
{
    switch (s) {
    case DeploymentStrategy::UserSideOnly:
        return "user";
    case DeploymentStrategy::BsSideOnly:
        return "bs";
    case DeploymentStrategy::Hybrid:
        return "hybrid";
    }
    return "unknown";
}

const Node &Scenario::node(const std::string &id) const
{
    const auto it = std::find_if(nodes.begin(), nodes.end(), [&](const Node &n) { return n.id == id; });
    if (it == nodes.end())
        throw DomainError("unknown node '" + id + "'");
    return *it;
}

const IrsSurface &Scenario::surface(const std::string &id) const
{
    const auto it = std::find_if(surfaces.begin(), surfaces.end(),
                                 [&](const IrsSurface &s) { return s.id == id; });
    if (it == surfaces.end())
        throw DomainError("unknown surface '" + id + "'");
    return *it;
}

IrsSurface &Scenario::surface(const std::string &id)
{
    return const_cast<IrsSurface &>(std::as_const(*this).surface(id));
}

LinkStateRule Scenario::rule(const std::string &a, const std::string &b) const
{
    NodePair pair(a, b);
    const auto it = link_rules.find(pair);
    if (it != link_rules.end())
        return it->second;
    return LinkStateRule{std::move(pair), 0.0, LinkState::NLoS};
}

LinkState Scenario::link_state(const std::string &a, const Position3D &pa, const std::string &b,
                               const Position3D &pb) const
{
    return resolve_link_state(rule(a, b), std::max(pa.z, pb.z));
}

PathLossModel Scenario::model(const std::string &cls, LinkState state) const
{
    const auto it = path_loss.find(cls);
    if (it == path_loss.end())
        throw ConfigError("no path-loss class '" + cls + "'");
    switch (state) {
    case LinkState::LoS:
        return it->second.los;
    case LinkState::NLoS:
        if (!it->second.nlos)
            throw ConfigError("path-loss class '" + cls + "' has no NLoS exponent");
        return *it->second.nlos;
    case LinkState::Blocked:
        break;
    }
    throw DomainError("blocked links carry no path-loss model");
}

std::vector<std::string> Scenario::node_ids(NodeRole role) const
{
    std::vector<std::string> out;
    for (const auto &n : nodes)
        if (n.role == role)
            out.push_back(n.id);
    return out;
}

const TrajectoryExperiment &Scenario::trajectory() const
{
    if (const auto *e = std::get_if<TrajectoryExperiment>(&experiment))
        return *e;
    throw ConfigError("scenario does not describe a trajectory experiment");
}

const DeploymentExperiment &Scenario::deployment() const
{
    if (const auto *e = std::get_if<DeploymentExperiment>(&experiment))
        return *e;
    throw ConfigError("scenario does not describe a deployment experiment");
}

Scenario without_irs(Scenario scenario)
{
    for (auto &s : scenario.surfaces)
        s.num_elements = 0;
    return scenario;
}

} // namespace airground
