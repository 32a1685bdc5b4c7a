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

#include "airground/deployment.hpp"
#include "airground/scenario_io.hpp"
#include "airground/schedule.hpp"
#include "airground/trajectory.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace airground;

const std::string kScenarioDir = AIRGROUND_SCENARIO_DIR;

void BM_PerSlotRates(benchmark::State &state)
{
    const auto s = load_scenario(kScenarioDir + "/fig4.scenario");
    const CollectionChannel ch(s);
    const auto q = Trajectory::straight(s.trajectory().constraints, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(ch.rates(q));
    state.SetItemsProcessed(state.iterations() * state.range(0) * static_cast<long>(ch.nodes()));
}
BENCHMARK(BM_PerSlotRates)->Arg(30)->Arg(300)->Arg(600);

void BM_OptimalSchedule(benchmark::State &state)
{
    const auto nodes = static_cast<std::size_t>(state.range(0));
    const auto slots = static_cast<std::size_t>(state.range(1));
    std::mt19937 rng(1);
    std::uniform_real_distribution<double> u(0.0, 10.0);
    RateMatrix r(nodes, slots);
    for (std::size_t k = 0; k < nodes; ++k)
        for (std::size_t t = 0; t < slots; ++t)
            r(k, t) = u(rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(optimal_schedule(r, 0.1));
}
BENCHMARK(BM_OptimalSchedule)->Args({2, 3})->Args({8, 100})->Args({8, 600});

void BM_ImproveTrajectory(benchmark::State &state)
{
    const auto s = load_scenario(kScenarioDir + "/fig4.scenario");
    const auto &e = s.trajectory();
    const CollectionChannel ch(s);
    const auto q = initial_candidates(ch, e.constraints, 200).back();
    const auto sched = optimal_schedule(ch.rates(q), q.slot_duration).schedule;
    for (auto _ : state)
        benchmark::DoNotOptimize(improve_trajectory(ch, q, sched, e.constraints, e.solver, 10.0));
}
BENCHMARK(BM_ImproveTrajectory)->Unit(benchmark::kMillisecond);

void BM_MinTimeMission(benchmark::State &state)
{
    const auto s = load_scenario(kScenarioDir + "/fig4.scenario");
    for (auto _ : state)
        benchmark::DoNotOptimize(min_time_mission(s));
}
BENCHMARK(BM_MinTimeMission)->Unit(benchmark::kMillisecond);

void BM_ExhaustiveAllocate(benchmark::State &state)
{
    const auto s = load_scenario(kScenarioDir + "/fig5.scenario");
    const auto threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(exhaustive_allocate(s, 600, threads));
}
BENCHMARK(BM_ExhaustiveAllocate)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
