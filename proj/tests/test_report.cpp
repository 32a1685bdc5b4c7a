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

#include "airground/irs.hpp"
#include "airground/report.hpp"
#include "airground/scenario_io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace airground {
namespace {

const std::string kScenarioDir = AIRGROUND_SCENARIO_DIR;

std::vector<std::vector<double>> parse_csv(const std::string &text, std::vector<std::string> &header)
{
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    header.clear();
    std::istringstream h(line);
    for (std::string cell; std::getline(h, cell, ',');)
        header.push_back(cell);
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        std::istringstream l(line);
        std::vector<double> row;
        for (std::string cell; std::getline(l, cell, ',');)
            row.push_back(std::stod(cell));
        rows.push_back(row);
    }
    return rows;
}

TEST(Digest, StableAndSensitive)
{
    auto s = load_scenario(kScenarioDir + "/fig4.scenario");
    const auto d = scenario_digest(s);
    EXPECT_EQ(d.size(), 64u);
    EXPECT_EQ(d, scenario_digest(load_scenario(kScenarioDir + "/fig4.scenario")));
    s.radio.tx_power_w *= 1.0 + 1e-15;
    EXPECT_NE(d, scenario_digest(s));
}

TEST(TrajectoryReport, RatesRecomputeFromEmittedTables)
{
    const auto s = load_scenario(kScenarioDir + "/fig4.scenario");
    RunOptions opt;
    opt.write_files = false;
    const auto bundle = run_trajectory(s, opt);
    const auto &missions = std::get<std::vector<LabeledMission>>(bundle.result);
    ASSERT_EQ(missions.size(), 2u);
    for (const auto &[label, m] : missions) {
        const bool irs = label == "irs";
        std::vector<std::string> header;
        const auto rows = parse_csv(trajectory_csv(m), header);
        ASSERT_EQ(rows.size(), m.trajectory.slots() + 1);
        ASSERT_EQ(header.size(), 5 + m.node_ids.size());
        EXPECT_EQ(header[5], "tau_SN1");
        for (double tau : std::vector<double>(rows.back().begin() + 5, rows.back().end()))
            EXPECT_EQ(tau, 0.0);

        // Channel-core only: direct LoS link plus, for covered nodes, the
        // phase-aligned IRS path.
        const auto &surf = s.surfaces[0];
        const double dt = s.trajectory().constraints.slot_duration;
        const double horizon = static_cast<double>(rows.size() - 1) * dt;
        for (std::size_t k = 0; k < m.node_ids.size(); ++k) {
            const auto &node = s.node(m.node_ids[k]);
            const bool covered = irs && surf.covered_node_ids->contains(node.id);
            double throughput = 0.0;
            for (std::size_t t = 0; t + 1 < rows.size(); ++t) {
                const Position3D uav{rows[t][2], rows[t][3], rows[t][4]};
                const double direct = std::sqrt(path_gain(distance(uav, node.position), {2.6}, s.radio));
                const double a = covered ? std::sqrt(path_gain(distance(uav, surf.position), {2.4}, s.radio)) *
                                               std::sqrt(path_gain(distance(surf.position, node.position), {2.2}, s.radio))
                                         : 0.0;
                const double snr = effective_snr_from_amplitudes(direct, covered ? 300 : 0, a, s.radio);
                throughput += rows[t][5 + k] * dt * rate_bps_hz(snr);
            }
            EXPECT_NEAR(throughput / horizon, m.per_node_rates[k], 1e-12 * m.per_node_rates[k])
                << label << " " << node.id;
        }
    }
}

TEST(TrajectoryReport, InMemoryDeterminism)
{
    const auto s = load_scenario(kScenarioDir + "/fig4.scenario");
    RunOptions opt;
    opt.write_files = false;
    const auto a = run_trajectory(s, opt);
    const auto b = run_trajectory(s, opt);
    const auto &ma = std::get<std::vector<LabeledMission>>(a.result);
    const auto &mb = std::get<std::vector<LabeledMission>>(b.result);
    for (std::size_t i = 0; i < ma.size(); ++i)
        EXPECT_EQ(trajectory_csv(ma[i].mission), trajectory_csv(mb[i].mission));
}

TEST(DeploymentReport, TableAndSummary)
{
    const auto s = load_scenario(kScenarioDir + "/fig5.scenario");
    const auto dir = std::filesystem::temp_directory_path() / "airground_report_test";
    std::filesystem::remove_all(dir);
    RunOptions opt;
    opt.out_dir = dir;
    opt.threads = 4;
    const auto bundle = run_deployment(s, opt);
    ASSERT_EQ(bundle.files.size(), 2u);
    std::ifstream in(dir / "deployment.csv");
    std::ostringstream text;
    text << in.rdbuf();
    const auto &results = std::get<std::vector<DeploymentResult>>(bundle.result);
    EXPECT_EQ(text.str(), deployment_csv(s, results));
    EXPECT_EQ(text.str().substr(0, text.str().find('\n')), "strategy,n1,n2,altitude,rate_U1,rate_U2,min_rate");

    std::ifstream js(dir / "summary.json");
    const auto j = nlohmann::json::parse(js);
    EXPECT_EQ(j["experiment"], "deployment");
    EXPECT_EQ(j["scenario_digest"], scenario_digest(s));
    EXPECT_EQ(j["strategies"]["hybrid"]["uirs_altitude"], 30.0);
    EXPECT_EQ(j["strategies"]["bs"]["uirs_altitude"], 50.0);
    EXPECT_TRUE(j["strategies"]["user"]["assignment"]["U1"].is_null());
    std::filesystem::remove_all(dir);
}

} // namespace
} // namespace airground
