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

#include "airground/report.hpp"

#include "airground/errors.hpp"
#include "airground/scenario_io.hpp"

#include <fmt/format.h>
#include <openssl/evp.h>

#include <chrono>
#include <fstream>
#include <memory>

#ifndef AIRGROUND_VERSION
#define AIRGROUND_VERSION "0.0.0"
#endif

namespace airground {

namespace {

std::string num(double v) { return fmt::format("{:.17g}", v); }

void write_file(const std::filesystem::path &path, const std::string &content)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    out << content;
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

} // namespace

std::string tool_version() { return AIRGROUND_VERSION; }

std::string scenario_digest(const Scenario &scenario)
{
    const std::string text = emit_scenario(scenario);
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx.get(), text.data(), text.size()) != 1 ||
        EVP_DigestFinal_ex(ctx.get(), digest, &len) != 1)
        throw std::runtime_error("sha256 digest failed");
    std::string hex;
    for (unsigned int i = 0; i < len; ++i)
        hex += fmt::format("{:02x}", digest[i]);
    return hex;
}

bool ResultBundle::infeasible() const
{
    if (const auto *missions = std::get_if<std::vector<LabeledMission>>(&result))
        for (const auto &m : *missions)
            if (!m.mission.feasible)
                return true;
    return false;
}

std::string trajectory_csv(const MissionResult &mission)
{
    std::string out = "slot,t_seconds,x,y,z";
    for (const auto &id : mission.node_ids)
        out += ",tau_" + id;
    out += '\n';
    const auto &w = mission.trajectory.waypoints;
    const auto &tau = mission.schedule.fractions;
    for (std::size_t t = 0; t < w.size(); ++t) {
        out += fmt::format("{},{},{},{},{}", t, num(static_cast<double>(t) * mission.trajectory.slot_duration),
                           num(w[t].x), num(w[t].y), num(w[t].z));
        for (std::size_t k = 0; k < mission.node_ids.size(); ++k)
            out += ',' + num(t < tau.slots() ? tau(k, t) : 0.0);
        out += '\n';
    }
    return out;
}

std::string deployment_csv(const Scenario &scenario, const std::vector<DeploymentResult> &results)
{
    const auto &users = scenario.deployment().users;
    std::string out = "strategy,n1,n2,altitude";
    for (const auto &u : users)
        out += ",rate_" + u;
    out += ",min_rate\n";
    for (const auto &r : results) {
        out += fmt::format("{},{},{},{}", to_string(r.strategy), r.plan.n1, r.plan.n2, num(r.plan.uirs_altitude));
        for (double rate : r.per_user_rates)
            out += ',' + num(rate);
        out += ',' + num(r.min_rate) + '\n';
    }
    return out;
}

nlohmann::json summary_json(const Scenario &scenario, const ResultBundle &bundle)
{
    nlohmann::json j;
    j["scenario"] = scenario.name;
    j["scenario_digest"] = bundle.scenario_digest;
    j["tool_version"] = bundle.tool_version;
    j["wall_time_s"] = bundle.wall_time;

    if (const auto *missions = std::get_if<std::vector<LabeledMission>>(&bundle.result)) {
        j["experiment"] = "trajectory";
        j["rate_target"] = scenario.trajectory().rate_target;
        for (const auto &[label, m] : *missions) {
            nlohmann::json mj;
            mj["mission_time_s"] = m.mission_time;
            mj["achieved_min_rate"] = m.achieved_min_rate;
            mj["feasible"] = m.feasible;
            mj["converged"] = m.converged;
            mj["iterations"] = m.iterations;
            mj["slots"] = m.trajectory.slots();
            for (std::size_t k = 0; k < m.node_ids.size(); ++k)
                mj["per_node_rates"][m.node_ids[k]] = m.per_node_rates[k];
            for (const auto &p : m.probes)
                mj["probes"].push_back({{"mission_time_s", p.mission_time},
                                        {"achieved_min_rate", p.achieved_min_rate},
                                        {"feasible", p.feasible},
                                        {"iterations", p.iterations}});
            j["missions"][label] = mj;
        }
    } else {
        j["experiment"] = "deployment";
        const auto &results = std::get<std::vector<DeploymentResult>>(bundle.result);
        const auto &users = scenario.deployment().users;
        for (const auto &r : results) {
            nlohmann::json rj;
            rj["n1"] = r.plan.n1;
            rj["n2"] = r.plan.n2;
            rj["uirs_altitude"] = r.plan.uirs_altitude;
            rj["min_rate"] = r.min_rate;
            for (std::size_t i = 0; i < users.size(); ++i) {
                rj["per_user_rates"][users[i]] = r.per_user_rates[i];
                const auto &serving = r.plan.assignment.at(users[i]);
                rj["assignment"][users[i]] = serving ? nlohmann::json(*serving) : nlohmann::json(nullptr);
            }
            j["strategies"][std::string(to_string(r.strategy))] = rj;
        }
    }
    return j;
}

ResultBundle run_trajectory(const Scenario &scenario, const RunOptions &options)
{
    const auto start = Clock::now();
    const auto &exp = scenario.trajectory();

    ResultBundle bundle;
    bundle.scenario_digest = scenario_digest(scenario);
    bundle.tool_version = tool_version();
    std::vector<LabeledMission> missions;
    missions.push_back({"irs", min_time_mission(scenario)});
    if (exp.compare_without_irs)
        missions.push_back({"no_irs", min_time_mission(without_irs(scenario))});
    bundle.result = std::move(missions);
    bundle.wall_time = seconds_since(start);

    if (options.write_files) {
        std::filesystem::create_directories(options.out_dir);
        for (const auto &[label, m] : std::get<std::vector<LabeledMission>>(bundle.result)) {
            const auto path = options.out_dir / ("trajectory_" + label + ".csv");
            write_file(path, trajectory_csv(m));
            bundle.files.push_back(path);
        }
        const auto path = options.out_dir / "summary.json";
        write_file(path, summary_json(scenario, bundle).dump(2) + "\n");
        bundle.files.push_back(path);
    }
    return bundle;
}

ResultBundle run_deployment(const Scenario &scenario, const RunOptions &options)
{
    const auto start = Clock::now();
    const auto &exp = scenario.deployment();

    ResultBundle bundle;
    bundle.scenario_digest = scenario_digest(scenario);
    bundle.tool_version = tool_version();
    const auto &strategies = options.strategies.empty() ? exp.strategies : options.strategies;
    std::vector<DeploymentResult> results;
    for (auto s : strategies)
        results.push_back(s == DeploymentStrategy::Hybrid
                              ? exhaustive_allocate(scenario, exp.n_budget, options.threads)
                              : evaluate_strategy(scenario, s, exp.n_budget));
    bundle.result = std::move(results);
    bundle.wall_time = seconds_since(start);

    if (options.write_files) {
        std::filesystem::create_directories(options.out_dir);
        const auto csv = options.out_dir / "deployment.csv";
        write_file(csv, deployment_csv(scenario, std::get<std::vector<DeploymentResult>>(bundle.result)));
        bundle.files.push_back(csv);
        const auto path = options.out_dir / "summary.json";
        write_file(path, summary_json(scenario, bundle).dump(2) + "\n");
        bundle.files.push_back(path);
    }
    return bundle;
}

} // namespace airground
