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

#include "airground/scenario_io.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace airground {

namespace {

[[noreturn]] void fail(const std::string &path, const std::string &msg)
{
    throw ScenarioError(path + ": " + msg);
}

std::string join(const std::string &path, const std::string &key)
{
    return path.empty() ? key : path + "." + key;
}

void expect_map(const YAML::Node &n, const std::string &path)
{
    if (!n.IsMap())
        fail(path, "expected a mapping");
}

void check_keys(const YAML::Node &n, const std::string &path, std::initializer_list<const char *> allowed)
{
    expect_map(n, path);
    for (const auto &kv : n) {
        const auto key = kv.first.as<std::string>();
        if (std::none_of(allowed.begin(), allowed.end(), [&](const char *a) { return key == a; }))
            fail(join(path, key), "unknown key");
    }
}

const YAML::Node require(const YAML::Node &n, const char *key, const std::string &path)
{
    const YAML::Node v = n[key];
    if (!v)
        fail(join(path, key), "missing required field");
    return v;
}

template <typename T>
T as(const YAML::Node &n, const std::string &path)
{
    try {
        return n.as<T>();
    } catch (const YAML::Exception &) {
        fail(path, "expected a " + std::string(std::is_same_v<T, double>  ? "number"
                                              : std::is_same_v<T, int>  ? "integer"
                                              : std::is_same_v<T, bool> ? "boolean"
                                                                        : "string"));
    }
}

template <typename T>
T get(const YAML::Node &n, const char *key, const std::string &path)
{
    return as<T>(require(n, key, path), join(path, key));
}

template <typename T>
T get_or(const YAML::Node &n, const char *key, const std::string &path, T fallback)
{
    const YAML::Node v = n[key];
    return v ? as<T>(v, join(path, key)) : fallback;
}

Position3D as_position(const YAML::Node &n, const std::string &path)
{
    if (!n.IsSequence() || n.size() != 3)
        fail(path, "expected a [x, y, z] triple");
    return {as<double>(n[0], path + "[0]"), as<double>(n[1], path + "[1]"), as<double>(n[2], path + "[2]")};
}

std::vector<std::string> as_string_list(const YAML::Node &n, const std::string &path)
{
    if (!n.IsSequence())
        fail(path, "expected a list");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n.size(); ++i)
        out.push_back(as<std::string>(n[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

NodeRole parse_role(const std::string &s, const std::string &path)
{
    if (s == "uav")
        return NodeRole::Uav;
    if (s == "bs")
        return NodeRole::BaseStation;
    if (s == "sensor")
        return NodeRole::SensorNode;
    if (s == "user")
        return NodeRole::User;
    fail(path, "unknown role '" + s + "' (expected uav, bs, sensor or user)");
}

LinkState parse_fallback(const std::string &s, const std::string &path)
{
    if (s == "nlos")
        return LinkState::NLoS;
    if (s == "blocked")
        return LinkState::Blocked;
    fail(path, "unknown fallback '" + s + "' (expected nlos or blocked)");
}

DeploymentStrategy parse_strategy(const std::string &s, const std::string &path)
{
    if (s == "user")
        return DeploymentStrategy::UserSideOnly;
    if (s == "bs")
        return DeploymentStrategy::BsSideOnly;
    if (s == "hybrid")
        return DeploymentStrategy::Hybrid;
    fail(path, "unknown strategy '" + s + "' (expected user, bs or hybrid)");
}

RadioParams parse_radio(const YAML::Node &n)
{
    RadioParams r;
    if (!n)
        return r;
    check_keys(n, "radio", {"tx_power_w", "noise_power_w", "ref_path_gain_db"});
    r.tx_power_w = get_or(n, "tx_power_w", "radio", r.tx_power_w);
    r.noise_power_w = get_or(n, "noise_power_w", "radio", r.noise_power_w);
    r.ref_path_gain_db = get_or(n, "ref_path_gain_db", "radio", r.ref_path_gain_db);
    return r;
}

std::map<std::string, LinkClass> parse_path_loss(const YAML::Node &n)
{
    std::map<std::string, LinkClass> out;
    expect_map(n, "path_loss");
    for (const auto &kv : n) {
        const auto name = kv.first.as<std::string>();
        const std::string path = join("path_loss", name);
        check_keys(kv.second, path, {"los", "nlos"});
        LinkClass c;
        c.los.exponent = get<double>(kv.second, "los", path);
        if (kv.second["nlos"])
            c.nlos = PathLossModel{get<double>(kv.second, "nlos", path)};
        out.emplace(name, c);
    }
    return out;
}

std::vector<Node> parse_nodes(const YAML::Node &n)
{
    if (!n.IsSequence())
        fail("nodes", "expected a list");
    std::vector<Node> out;
    for (std::size_t i = 0; i < n.size(); ++i) {
        const std::string path = "nodes[" + std::to_string(i) + "]";
        check_keys(n[i], path, {"id", "role", "position"});
        Node node;
        node.id = get<std::string>(n[i], "id", path);
        node.role = parse_role(get<std::string>(n[i], "role", path), join(path, "role"));
        node.position = as_position(require(n[i], "position", path), join(path, "position"));
        out.push_back(std::move(node));
    }
    return out;
}

std::vector<IrsSurface> parse_surfaces(const YAML::Node &n)
{
    std::vector<IrsSurface> out;
    if (!n)
        return out;
    if (!n.IsSequence())
        fail("surfaces", "expected a list");
    for (std::size_t i = 0; i < n.size(); ++i) {
        const std::string path = "surfaces[" + std::to_string(i) + "]";
        const YAML::Node s = n[i];
        check_keys(s, path,
                   {"id", "kind", "position", "elements", "facing_normal", "coverage_radius", "covered_nodes"});
        IrsSurface surf;
        surf.id = get<std::string>(s, "id", path);
        const auto kind = get<std::string>(s, "kind", path);
        if (kind == "terrestrial")
            surf.kind = SurfaceKind::Terrestrial;
        else if (kind == "aerial")
            surf.kind = SurfaceKind::AerialMounted;
        else
            fail(join(path, "kind"), "unknown kind '" + kind + "' (expected terrestrial or aerial)");
        surf.position = as_position(require(s, "position", path), join(path, "position"));
        surf.num_elements = get_or(s, "elements", path, 0);
        if (s["facing_normal"])
            surf.facing_normal = as_position(s["facing_normal"], join(path, "facing_normal"));
        if (s["coverage_radius"])
            surf.coverage_radius = get<double>(s, "coverage_radius", path);
        if (s["covered_nodes"]) {
            const auto ids = as_string_list(s["covered_nodes"], join(path, "covered_nodes"));
            surf.covered_node_ids = std::set<std::string>(ids.begin(), ids.end());
        }
        out.push_back(std::move(surf));
    }
    return out;
}

LinkStateRuleSet parse_rules(const YAML::Node &n)
{
    LinkStateRuleSet out;
    if (!n)
        return out;
    if (!n.IsSequence())
        fail("link_rules", "expected a list");
    for (std::size_t i = 0; i < n.size(); ++i) {
        const std::string path = "link_rules[" + std::to_string(i) + "]";
        check_keys(n[i], path, {"between", "min_altitude_for_los", "fallback"});
        const auto ends = as_string_list(require(n[i], "between", path), join(path, "between"));
        if (ends.size() != 2 || ends[0] == ends[1])
            fail(join(path, "between"), "expected two distinct identifiers");
        LinkStateRule rule{NodePair(ends[0], ends[1]),
                           get_or(n[i], "min_altitude_for_los", path, 0.0),
                           parse_fallback(get_or<std::string>(n[i], "fallback", path, "nlos"),
                                          join(path, "fallback"))};
        if (!out.emplace(rule.endpoints, rule).second)
            fail(path, "duplicate rule for (" + ends[0] + ", " + ends[1] + ")");
    }
    return out;
}

SolverSettings parse_solver(const YAML::Node &n, const std::string &path)
{
    SolverSettings s;
    if (!n)
        return s;
    check_keys(n, path,
               {"softmin_temperature", "max_iterations", "relative_tolerance", "line_search_backtracks",
                "line_search_shrink"});
    s.softmin_temperature = get_or(n, "softmin_temperature", path, s.softmin_temperature);
    s.max_iterations = get_or(n, "max_iterations", path, s.max_iterations);
    s.relative_tolerance = get_or(n, "relative_tolerance", path, s.relative_tolerance);
    s.line_search_backtracks = get_or(n, "line_search_backtracks", path, s.line_search_backtracks);
    s.line_search_shrink = get_or(n, "line_search_shrink", path, s.line_search_shrink);
    return s;
}

Experiment parse_experiment(const YAML::Node &n, const std::vector<Node> &nodes)
{
    check_keys(n, "experiment", {"trajectory", "deployment"});
    if (n.size() != 1)
        fail("experiment", "exactly one of 'trajectory' or 'deployment' is required");

    if (const YAML::Node t = n["trajectory"]) {
        const std::string path = "experiment.trajectory";
        check_keys(t, path,
                   {"uav", "start", "end", "v_max", "slot_duration", "max_time", "rate_target",
                    "compare_without_irs", "solver"});
        TrajectoryExperiment e;
        e.uav_id = get_or<std::string>(t, "uav", path, e.uav_id);
        e.constraints.start = as_position(require(t, "start", path), join(path, "start"));
        e.constraints.end = as_position(require(t, "end", path), join(path, "end"));
        e.constraints.fixed_altitude = e.constraints.start.z;
        e.constraints.v_max = get<double>(t, "v_max", path);
        e.constraints.slot_duration = get_or(t, "slot_duration", path, e.constraints.slot_duration);
        e.max_time = get_or(t, "max_time", path, e.max_time);
        e.rate_target = get<double>(t, "rate_target", path);
        e.compare_without_irs = get_or(t, "compare_without_irs", path, e.compare_without_irs);
        e.solver = parse_solver(t["solver"], join(path, "solver"));
        return e;
    }

    const YAML::Node d = n["deployment"];
    const std::string path = "experiment.deployment";
    check_keys(d, path,
               {"n_budget", "base_station", "aerial_surface", "terrestrial_surface", "users", "strategies"});
    DeploymentExperiment e;
    e.n_budget = get<int>(d, "n_budget", path);
    e.base_station = get<std::string>(d, "base_station", path);
    e.aerial_surface = get<std::string>(d, "aerial_surface", path);
    e.terrestrial_surface = get<std::string>(d, "terrestrial_surface", path);
    if (d["users"]) {
        e.users = as_string_list(d["users"], join(path, "users"));
    } else {
        for (const auto &node : nodes)
            if (node.role == NodeRole::User)
                e.users.push_back(node.id);
    }
    if (d["strategies"]) {
        e.strategies.clear();
        const auto names = as_string_list(d["strategies"], join(path, "strategies"));
        for (std::size_t i = 0; i < names.size(); ++i)
            e.strategies.push_back(
                parse_strategy(names[i], join(path, "strategies") + "[" + std::to_string(i) + "]"));
    }
    return e;
}

bool finite(const Position3D &p) { return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z); }

void validate_position(const Position3D &p, const std::string &path)
{
    if (!finite(p))
        fail(path, "coordinates must be finite");
    if (p.z < 0.0)
        fail(path, "altitude must be >= 0");
}

void require_class(const Scenario &s, const char *cls, const std::string &why)
{
    if (!s.path_loss.contains(cls))
        fail(std::string("path_loss.") + cls, "missing (required by " + why + ")");
}

} // namespace

void validate_scenario(const Scenario &s)
{
    try {
        s.radio.validate();
    } catch (const ConfigError &e) {
        throw ScenarioError(e.what());
    }

    for (const auto &[name, cls] : s.path_loss) {
        if (!(cls.los.exponent >= 1.0) || !std::isfinite(cls.los.exponent))
            fail("path_loss." + name + ".los", "exponent must be a finite number >= 1");
        if (cls.nlos && (!(cls.nlos->exponent >= 1.0) || !std::isfinite(cls.nlos->exponent)))
            fail("path_loss." + name + ".nlos", "exponent must be a finite number >= 1");
    }

    std::set<std::string> ids;
    for (std::size_t i = 0; i < s.nodes.size(); ++i) {
        const std::string path = "nodes[" + std::to_string(i) + "]";
        if (s.nodes[i].id.empty())
            fail(join(path, "id"), "must not be empty");
        if (!ids.insert(s.nodes[i].id).second)
            fail(join(path, "id"), "duplicate identifier '" + s.nodes[i].id + "'");
        validate_position(s.nodes[i].position, join(path, "position"));
        for (std::size_t j = 0; j < i; ++j)
            if (distance(s.nodes[i].position, s.nodes[j].position) <= 0.0)
                fail(join(path, "position"), "coincides with node '" + s.nodes[j].id + "'");
    }
    for (std::size_t i = 0; i < s.surfaces.size(); ++i) {
        const std::string path = "surfaces[" + std::to_string(i) + "]";
        const IrsSurface &surf = s.surfaces[i];
        if (surf.id.empty())
            fail(join(path, "id"), "must not be empty");
        if (!ids.insert(surf.id).second)
            fail(join(path, "id"), "duplicate identifier '" + surf.id + "'");
        validate_position(surf.position, join(path, "position"));
        if (surf.num_elements < 0)
            fail(join(path, "elements"), "must be >= 0");
        if (surf.kind == SurfaceKind::Terrestrial) {
            if (!finite(surf.facing_normal) || surf.facing_normal.norm() == 0.0)
                fail(join(path, "facing_normal"), "terrestrial surfaces need a non-zero facing normal");
            for (const auto &n : s.nodes)
                if (distance(n.position, surf.position) <= 0.0)
                    fail(join(path, "position"), "coincides with node '" + n.id + "'");
        }
        if (surf.coverage_radius && !(*surf.coverage_radius > 0.0))
            fail(join(path, "coverage_radius"), "must be > 0");
        if (surf.covered_node_ids)
            for (const auto &id : *surf.covered_node_ids)
                if (std::none_of(s.nodes.begin(), s.nodes.end(), [&](const Node &n) { return n.id == id; }))
                    fail(join(path, "covered_nodes"), "unknown node '" + id + "'");
    }

    std::set<std::string> endpoints = ids;
    if (s.is_trajectory())
        endpoints.insert(s.trajectory().uav_id);
    for (const auto &[pair, rule] : s.link_rules) {
        const std::string path = "link_rules(" + pair.first() + ", " + pair.second() + ")";
        for (const auto *id : {&pair.first(), &pair.second()})
            if (!endpoints.contains(*id))
                fail(path, "unknown endpoint '" + *id + "'");
        if (!(rule.min_altitude_for_los >= 0.0) || !std::isfinite(rule.min_altitude_for_los))
            fail(path + ".min_altitude_for_los", "must be a finite number >= 0");
        if (rule.fallback == LinkState::LoS)
            fail(path + ".fallback", "must be nlos or blocked");
    }

    if (s.is_trajectory()) {
        const std::string path = "experiment.trajectory";
        const auto &e = s.trajectory();
        const auto &c = e.constraints;
        if (e.uav_id.empty())
            fail(join(path, "uav"), "must not be empty");
        validate_position(c.start, join(path, "start"));
        validate_position(c.end, join(path, "end"));
        if (c.start.z != c.end.z || c.fixed_altitude != c.start.z)
            fail(join(path, "end"), "start and end must share the fixed flight altitude");
        if (!(c.v_max > 0.0) || !std::isfinite(c.v_max))
            fail(join(path, "v_max"), "must be > 0");
        if (!(c.slot_duration > 0.0) || !std::isfinite(c.slot_duration))
            fail(join(path, "slot_duration"), "must be > 0");
        if (!(e.rate_target > 0.0) || !std::isfinite(e.rate_target))
            fail(join(path, "rate_target"), "must be > 0");
        if (!(e.max_time > 0.0) || !std::isfinite(e.max_time))
            fail(join(path, "max_time"), "must be > 0");
        if (e.max_time + 1e-9 < distance(c.start, c.end) / c.v_max)
            fail(join(path, "max_time"), "shorter than the straight start-to-end flight");
        const auto &sv = e.solver;
        if (!(sv.softmin_temperature > 0.0))
            fail(join(path, "solver.softmin_temperature"), "must be > 0");
        if (sv.max_iterations < 0)
            fail(join(path, "solver.max_iterations"), "must be >= 0");
        if (!(sv.relative_tolerance >= 0.0))
            fail(join(path, "solver.relative_tolerance"), "must be >= 0");
        if (sv.line_search_backtracks < 0)
            fail(join(path, "solver.line_search_backtracks"), "must be >= 0");
        if (!(sv.line_search_shrink > 0.0 && sv.line_search_shrink < 1.0))
            fail(join(path, "solver.line_search_shrink"), "must lie in (0, 1)");
        if (s.node_ids(NodeRole::SensorNode).empty())
            fail("nodes", "a trajectory experiment needs at least one sensor node");
        require_class(s, link_class::kDirect, "the trajectory experiment");
        if (!s.surfaces.empty()) {
            require_class(s, link_class::kUavIrs, "surfaces in a trajectory experiment");
            require_class(s, link_class::kIrsNode, "surfaces in a trajectory experiment");
        }
    } else {
        const std::string path = "experiment.deployment";
        const auto &e = s.deployment();
        if (e.n_budget < 0)
            fail(join(path, "n_budget"), "must be >= 0");
        auto role_of = [&](const std::string &id) -> std::optional<NodeRole> {
            for (const auto &n : s.nodes)
                if (n.id == id)
                    return n.role;
            return std::nullopt;
        };
        auto kind_of = [&](const std::string &id) -> std::optional<SurfaceKind> {
            for (const auto &surf : s.surfaces)
                if (surf.id == id)
                    return surf.kind;
            return std::nullopt;
        };
        if (role_of(e.base_station) != NodeRole::BaseStation)
            fail(join(path, "base_station"), "'" + e.base_station + "' is not a bs node");
        if (kind_of(e.aerial_surface) != SurfaceKind::AerialMounted)
            fail(join(path, "aerial_surface"), "'" + e.aerial_surface + "' is not an aerial surface");
        if (kind_of(e.terrestrial_surface) != SurfaceKind::Terrestrial)
            fail(join(path, "terrestrial_surface"),
                 "'" + e.terrestrial_surface + "' is not a terrestrial surface");
        if (e.users.empty())
            fail(join(path, "users"), "at least one user is required");
        std::set<std::string> seen;
        for (const auto &u : e.users) {
            if (role_of(u) != NodeRole::User)
                fail(join(path, "users"), "'" + u + "' is not a user node");
            if (!seen.insert(u).second)
                fail(join(path, "users"), "duplicate user '" + u + "'");
        }
        if (e.strategies.empty())
            fail(join(path, "strategies"), "at least one strategy is required");
        std::set<DeploymentStrategy> strategies(e.strategies.begin(), e.strategies.end());
        if (strategies.size() != e.strategies.size())
            fail(join(path, "strategies"), "duplicate strategy");
        require_class(s, link_class::kBsIrs, "the deployment experiment");
        require_class(s, link_class::kIrsUser, "the deployment experiment");
    }
}

Scenario parse_scenario(const std::string &text)
{
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::ParserException &e) {
        throw ScenarioError("parse error at line " + std::to_string(e.mark.line + 1) + ", column " +
                            std::to_string(e.mark.column + 1) + ": " + e.msg);
    }
    if (!root || !root.IsMap())
        throw ScenarioError("scenario: expected a mapping at the top level");
    check_keys(root, "", {"name", "radio", "path_loss", "nodes", "surfaces", "link_rules", "experiment"});

    Scenario s;
    s.name = get_or<std::string>(root, "name", "", "");
    s.radio = parse_radio(root["radio"]);
    s.path_loss = parse_path_loss(require(root, "path_loss", ""));
    s.nodes = parse_nodes(require(root, "nodes", ""));
    s.surfaces = parse_surfaces(root["surfaces"]);
    s.link_rules = parse_rules(root["link_rules"]);
    s.experiment = parse_experiment(require(root, "experiment", ""), s.nodes);
    validate_scenario(s);
    return s;
}

Scenario load_scenario(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ScenarioError(path.string() + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_scenario(buf.str());
    } catch (const ScenarioError &e) {
        throw ScenarioError(path.string() + ": " + e.what());
    }
}

namespace {

YAML::Emitter &operator<<(YAML::Emitter &out, const Position3D &p)
{
    out << YAML::Flow << YAML::BeginSeq << p.x << p.y << p.z << YAML::EndSeq;
    return out;
}

} // namespace

std::string emit_scenario(const Scenario &s)
{
    YAML::Emitter out;
    out.SetDoublePrecision(17);
    out << YAML::BeginMap;
    out << YAML::Key << "name" << YAML::Value << YAML::DoubleQuoted << s.name;

    out << YAML::Key << "radio" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "tx_power_w" << YAML::Value << s.radio.tx_power_w;
    out << YAML::Key << "noise_power_w" << YAML::Value << s.radio.noise_power_w;
    out << YAML::Key << "ref_path_gain_db" << YAML::Value << s.radio.ref_path_gain_db;
    out << YAML::EndMap;

    out << YAML::Key << "path_loss" << YAML::Value << YAML::BeginMap;
    for (const auto &[name, cls] : s.path_loss) {
        out << YAML::Key << name << YAML::Value << YAML::Flow << YAML::BeginMap;
        out << YAML::Key << "los" << YAML::Value << cls.los.exponent;
        if (cls.nlos)
            out << YAML::Key << "nlos" << YAML::Value << cls.nlos->exponent;
        out << YAML::EndMap;
    }
    out << YAML::EndMap;

    out << YAML::Key << "nodes" << YAML::Value << YAML::BeginSeq;
    for (const auto &n : s.nodes) {
        out << YAML::Flow << YAML::BeginMap;
        out << YAML::Key << "id" << YAML::Value << YAML::DoubleQuoted << n.id;
        out << YAML::Key << "role" << YAML::Value << std::string(to_string(n.role));
        out << YAML::Key << "position" << YAML::Value << n.position;
        out << YAML::EndMap;
    }
    out << YAML::EndSeq;

    out << YAML::Key << "surfaces" << YAML::Value << YAML::BeginSeq;
    for (const auto &surf : s.surfaces) {
        out << YAML::BeginMap;
        out << YAML::Key << "id" << YAML::Value << YAML::DoubleQuoted << surf.id;
        out << YAML::Key << "kind" << YAML::Value << std::string(to_string(surf.kind));
        out << YAML::Key << "position" << YAML::Value << surf.position;
        out << YAML::Key << "elements" << YAML::Value << surf.num_elements;
        if (surf.kind == SurfaceKind::Terrestrial || surf.facing_normal.norm() > 0.0)
            out << YAML::Key << "facing_normal" << YAML::Value << surf.facing_normal;
        if (surf.coverage_radius)
            out << YAML::Key << "coverage_radius" << YAML::Value << *surf.coverage_radius;
        if (surf.covered_node_ids) {
            out << YAML::Key << "covered_nodes" << YAML::Value << YAML::Flow << YAML::BeginSeq;
            for (const auto &id : *surf.covered_node_ids)
                out << YAML::DoubleQuoted << id;
            out << YAML::EndSeq;
        }
        out << YAML::EndMap;
    }
    out << YAML::EndSeq;

    out << YAML::Key << "link_rules" << YAML::Value << YAML::BeginSeq;
    for (const auto &[pair, rule] : s.link_rules) {
        out << YAML::Flow << YAML::BeginMap;
        out << YAML::Key << "between" << YAML::Value << YAML::Flow << YAML::BeginSeq
            << YAML::DoubleQuoted << pair.first() << YAML::DoubleQuoted << pair.second() << YAML::EndSeq;
        out << YAML::Key << "min_altitude_for_los" << YAML::Value << rule.min_altitude_for_los;
        out << YAML::Key << "fallback" << YAML::Value << std::string(to_string(rule.fallback));
        out << YAML::EndMap;
    }
    out << YAML::EndSeq;

    out << YAML::Key << "experiment" << YAML::Value << YAML::BeginMap;
    if (s.is_trajectory()) {
        const auto &e = s.trajectory();
        out << YAML::Key << "trajectory" << YAML::Value << YAML::BeginMap;
        out << YAML::Key << "uav" << YAML::Value << YAML::DoubleQuoted << e.uav_id;
        out << YAML::Key << "start" << YAML::Value << e.constraints.start;
        out << YAML::Key << "end" << YAML::Value << e.constraints.end;
        out << YAML::Key << "v_max" << YAML::Value << e.constraints.v_max;
        out << YAML::Key << "slot_duration" << YAML::Value << e.constraints.slot_duration;
        out << YAML::Key << "max_time" << YAML::Value << e.max_time;
        out << YAML::Key << "rate_target" << YAML::Value << e.rate_target;
        out << YAML::Key << "compare_without_irs" << YAML::Value << e.compare_without_irs;
        out << YAML::Key << "solver" << YAML::Value << YAML::BeginMap;
        out << YAML::Key << "softmin_temperature" << YAML::Value << e.solver.softmin_temperature;
        out << YAML::Key << "max_iterations" << YAML::Value << e.solver.max_iterations;
        out << YAML::Key << "relative_tolerance" << YAML::Value << e.solver.relative_tolerance;
        out << YAML::Key << "line_search_backtracks" << YAML::Value << e.solver.line_search_backtracks;
        out << YAML::Key << "line_search_shrink" << YAML::Value << e.solver.line_search_shrink;
        out << YAML::EndMap;
        out << YAML::EndMap;
    } else {
        const auto &e = s.deployment();
        out << YAML::Key << "deployment" << YAML::Value << YAML::BeginMap;
        out << YAML::Key << "n_budget" << YAML::Value << e.n_budget;
        out << YAML::Key << "base_station" << YAML::Value << YAML::DoubleQuoted << e.base_station;
        out << YAML::Key << "aerial_surface" << YAML::Value << YAML::DoubleQuoted << e.aerial_surface;
        out << YAML::Key << "terrestrial_surface" << YAML::Value << YAML::DoubleQuoted
            << e.terrestrial_surface;
        out << YAML::Key << "users" << YAML::Value << YAML::Flow << YAML::BeginSeq;
        for (const auto &u : e.users)
            out << YAML::DoubleQuoted << u;
        out << YAML::EndSeq;
        out << YAML::Key << "strategies" << YAML::Value << YAML::Flow << YAML::BeginSeq;
        for (auto st : e.strategies)
            out << std::string(to_string(st));
        out << YAML::EndSeq;
        out << YAML::EndMap;
    }
    out << YAML::EndMap;
    out << YAML::EndMap;
    return std::string(out.c_str()) + "\n";
}

} // namespace airground
