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

// Command-line front end: trajopt, deploy and validate subcommands.
//
// Exit codes: 0 success, 2 usage or validation error, 3 infeasible,
// 4 internal error.

#include "airground/report.hpp"
#include "airground/scenario_io.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <iostream>
#include <optional>
#include <string>

namespace {

enum ExitCode : int { kOk = 0, kUsage = 2, kInfeasible = 3, kInternal = 4 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<airground::DeploymentStrategy> parse_strategies(const std::string &spec)
{
    using airground::DeploymentStrategy;
    if (spec == "all")
        return {DeploymentStrategy::UserSideOnly, DeploymentStrategy::BsSideOnly, DeploymentStrategy::Hybrid};
    std::vector<DeploymentStrategy> out;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        const auto comma = spec.find(',', pos);
        const std::string item = spec.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (item == "user")
            out.push_back(DeploymentStrategy::UserSideOnly);
        else if (item == "bs")
            out.push_back(DeploymentStrategy::BsSideOnly);
        else if (item == "hybrid")
            out.push_back(DeploymentStrategy::Hybrid);
        else
            throw UsageError("unknown strategy '" + item + "' (expected user, bs, hybrid or all)");
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return out;
}

void print_trajectory(const airground::ResultBundle &bundle)
{
    for (const auto &[label, m] : std::get<std::vector<airground::LabeledMission>>(bundle.result))
        std::cout << fmt::format("{:>7}: mission time {:.1f} s, min rate {:.4f} bps/Hz{}\n", label,
                                 m.mission_time, m.achieved_min_rate, m.feasible ? "" : " (INFEASIBLE)");
}

void print_deployment(const airground::ResultBundle &bundle)
{
    for (const auto &r : std::get<std::vector<airground::DeploymentResult>>(bundle.result))
        std::cout << fmt::format("{:>7}: n1={} n2={} altitude={:g} m, min rate {:.4f} bps/Hz\n",
                                 airground::to_string(r.strategy), r.plan.n1, r.plan.n2,
                                 r.plan.uirs_altitude, r.min_rate);
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"IRS/UAV air-ground network optimizer"};
    app.require_subcommand(1);

    std::string scenario_path;
    std::string out_dir = "out";
    bool quiet = false;
    std::optional<double> rate_target;
    std::optional<double> slot_duration;
    std::optional<double> max_time;
    std::string strategies = "all";
    unsigned threads = 1;

    auto *trajopt = app.add_subcommand("trajopt", "Minimum-time UAV data collection");
    trajopt->add_option("scenario", scenario_path, "Scenario file")->required();
    trajopt->add_option("--rate-target", rate_target, "Override the max-min rate target (bps/Hz)");
    trajopt->add_option("--slot-duration", slot_duration, "Override the slot duration (s)");
    trajopt->add_option("--max-time", max_time, "Override the mission time cap (s)");
    trajopt->add_option("--out", out_dir, "Output directory")->capture_default_str();
    trajopt->add_flag("--quiet", quiet, "Suppress the console summary");

    auto *deploy = app.add_subcommand("deploy", "Hybrid IRS deployment and element allocation");
    deploy->add_option("scenario", scenario_path, "Scenario file")->required();
    deploy->add_option("--strategies", strategies, "user|bs|hybrid|all (comma-separated)")
        ->capture_default_str();
    deploy->add_option("--threads", threads, "Worker threads for the split enumeration")
        ->capture_default_str()
        ->check(CLI::Range(1u, 256u));
    deploy->add_option("--out", out_dir, "Output directory")->capture_default_str();
    deploy->add_flag("--quiet", quiet, "Suppress the console summary");

    auto *validate = app.add_subcommand("validate", "Parse and validate a scenario file");
    validate->add_option("scenario", scenario_path, "Scenario file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kUsage;
    }

    try {
        airground::Scenario scenario = airground::load_scenario(scenario_path);
        airground::RunOptions options;
        options.out_dir = out_dir;

        if (*validate) {
            std::cout << scenario_path << ": ok ("
                      << (scenario.is_trajectory() ? "trajectory" : "deployment") << " experiment)\n";
            return kOk;
        }

        if (*trajopt) {
            if (!scenario.is_trajectory())
                throw UsageError("trajopt needs a trajectory experiment; '" + scenario_path +
                                 "' describes a deployment experiment");
            auto &exp = std::get<airground::TrajectoryExperiment>(scenario.experiment);
            if (rate_target)
                exp.rate_target = *rate_target;
            if (slot_duration)
                exp.constraints.slot_duration = *slot_duration;
            if (max_time)
                exp.max_time = *max_time;
            airground::validate_scenario(scenario);
            const auto bundle = airground::run_trajectory(scenario, options);
            if (!quiet)
                print_trajectory(bundle);
            return bundle.infeasible() ? kInfeasible : kOk;
        }

        if (!scenario.is_deployment())
            throw UsageError("deploy needs a deployment experiment; '" + scenario_path +
                             "' describes a trajectory experiment");
        options.strategies = parse_strategies(strategies);
        options.threads = threads;
        const auto bundle = airground::run_deployment(scenario, options);
        if (!quiet)
            print_deployment(bundle);
        return kOk;
    } catch (const UsageError &e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const airground::ConfigError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const airground::DomainError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternal;
    }
}
