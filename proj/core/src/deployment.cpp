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

#include "airground/errors.hpp"
#include "airground/irs.hpp"

#include <algorithm>
#include <thread>

namespace airground {

namespace {

Position3D surface_position(const IrsSurface &surface, double altitude)
{
    if (surface.kind == SurfaceKind::AerialMounted)
        return {surface.position.x, surface.position.y, altitude};
    return surface.position;
}

void require_user(const DeploymentExperiment &exp, const std::string &user_id)
{
    if (std::find(exp.users.begin(), exp.users.end(), user_id) == exp.users.end())
        throw DomainError("unknown user '" + user_id + "'");
}

double min_of(const std::vector<double> &v)
{
    return v.empty() ? 0.0 : *std::min_element(v.begin(), v.end());
}

std::vector<double> altitude_candidates(const Scenario &scenario)
{
    const auto &exp = scenario.deployment();
    std::vector<double> out{0.0};
    for (const auto &u : exp.users)
        out.push_back(scenario.rule(exp.aerial_surface, u).min_altitude_for_los);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

LinkStateRuleSet aerial_rules(const Scenario &scenario)
{
    const auto &exp = scenario.deployment();
    LinkStateRuleSet rules;
    for (const auto &u : exp.users) {
        auto r = scenario.rule(exp.aerial_surface, u);
        rules.emplace(r.endpoints, r);
    }
    return rules;
}

struct Assignment {
    std::map<std::string, std::optional<std::string>> serving;
    std::vector<double> rates;
};

// Per-user choice between the two surfaces; `aerial_enabled` false drops
// the aerial surface from consideration entirely.
Assignment assign_users(const Scenario &scenario, int n1, int n2, double altitude, bool aerial_enabled)
{
    const auto &exp = scenario.deployment();
    Assignment out;
    for (const auto &u : exp.users) {
        const auto ra = aerial_enabled
                            ? candidate_rate(scenario, n1, n2, altitude, u, exp.aerial_surface)
                            : std::nullopt;
        const auto rt = candidate_rate(scenario, n1, n2, altitude, u, exp.terrestrial_surface);
        if (ra && (!rt || *ra > *rt)) {
            out.serving[u] = exp.aerial_surface;
            out.rates.push_back(*ra);
        } else if (rt) {
            out.serving[u] = exp.terrestrial_surface;
            out.rates.push_back(*rt);
        } else {
            out.serving[u] = std::nullopt;
            out.rates.push_back(0.0);
        }
    }
    return out;
}

DeploymentResult make_result(DeploymentStrategy strategy, int n1, int n2, double altitude, Assignment a)
{
    DeploymentResult r;
    r.strategy = strategy;
    r.plan.n1 = n1;
    r.plan.n2 = n2;
    r.plan.uirs_altitude = altitude;
    r.plan.assignment = std::move(a.serving);
    r.per_user_rates = std::move(a.rates);
    r.min_rate = min_of(r.per_user_rates);
    return r;
}

} // namespace

std::optional<double> candidate_rate(const Scenario &scenario, int n1, int n2, double altitude,
                                     const std::string &user_id, const std::string &surface_id)
{
    const auto &exp = scenario.deployment();
    require_user(exp, user_id);
    const Node &bs = scenario.node(exp.base_station);
    const Node &user = scenario.node(user_id);
    const IrsSurface &surface = scenario.surface(surface_id);
    const int elements = surface_id == exp.aerial_surface ? n1 : n2;

    const Position3D at = surface_position(surface, altitude);
    const LinkState user_leg = scenario.link_state(surface.id, at, user.id, user.position);
    if (!covers(surface, user.position, user_leg, user.id))
        return std::nullopt;
    const LinkState bs_leg = scenario.link_state(bs.id, bs.position, surface.id, at);
    if (user_leg == LinkState::Blocked || bs_leg == LinkState::Blocked)
        return 0.0;

    const CascadedLink link{distance(bs.position, at), distance(at, user.position),
                            scenario.model(link_class::kBsIrs, bs_leg),
                            scenario.model(link_class::kIrsUser, user_leg), elements};
    const double snr = effective_snr(0.0, link, scenario.radio);
    return rate_bps_hz(snr, 1.0 / static_cast<double>(exp.users.size()));
}

void validate_plan(const Scenario &scenario, const DeploymentPlan &plan)
{
    const auto &exp = scenario.deployment();
    if (plan.n1 < 0 || plan.n2 < 0 || plan.n1 + plan.n2 != exp.n_budget)
        throw DomainError("deployment plan: n1 + n2 must equal the element budget with n1, n2 >= 0");
    for (const auto &[user, surface] : plan.assignment) {
        require_user(exp, user);
        if (!surface)
            continue;
        if (*surface != exp.aerial_surface && *surface != exp.terrestrial_surface)
            throw DomainError("deployment plan: unknown serving surface '" + *surface + "'");
        if (!candidate_rate(scenario, plan.n1, plan.n2, plan.uirs_altitude, user, *surface))
            throw DomainError("deployment plan: surface '" + *surface + "' cannot serve '" + user + "'");
    }
}

double user_rate(const Scenario &scenario, const DeploymentPlan &plan, const std::string &user_id)
{
    require_user(scenario.deployment(), user_id);
    validate_plan(scenario, plan);
    const auto it = plan.assignment.find(user_id);
    if (it == plan.assignment.end() || !it->second)
        return 0.0;
    return *candidate_rate(scenario, plan.n1, plan.n2, plan.uirs_altitude, user_id, *it->second);
}

DeploymentResult evaluate_split(const Scenario &scenario, int n1, int n2)
{
    std::optional<DeploymentResult> best;
    for (double h : altitude_candidates(scenario)) {
        DeploymentResult r = make_result(DeploymentStrategy::Hybrid, n1, n2, h,
                                         assign_users(scenario, n1, n2, h, true));
        if (!best || r.min_rate > best->min_rate)
            best = std::move(r);
    }
    return *best;
}

DeploymentResult evaluate_strategy(const Scenario &scenario, DeploymentStrategy strategy, int n_budget)
{
    if (n_budget < 0)
        throw DomainError("evaluate_strategy: element budget must be non-negative");
    const auto &exp = scenario.deployment();
    switch (strategy) {
    case DeploymentStrategy::UserSideOnly:
        return make_result(strategy, 0, n_budget, 0.0,
                           assign_users(scenario, 0, n_budget, 0.0, false));
    case DeploymentStrategy::BsSideOnly: {
        const double h = min_serving_altitude(scenario.surface(exp.aerial_surface), exp.users,
                                              aerial_rules(scenario));
        return make_result(strategy, n_budget, 0, h, assign_users(scenario, n_budget, 0, h, true));
    }
    case DeploymentStrategy::Hybrid:
        return exhaustive_allocate(scenario, n_budget);
    }
    throw DomainError("evaluate_strategy: unknown strategy");
}

DeploymentResult exhaustive_allocate(const Scenario &scenario, int n_budget, unsigned threads)
{
    if (n_budget < 0)
        throw DomainError("exhaustive_allocate: element budget must be non-negative");
    const auto count = static_cast<std::size_t>(n_budget) + 1;
    std::vector<std::optional<DeploymentResult>> scored(count);

    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const int n1 = static_cast<int>(i);
            scored[i] = evaluate_split(scenario, n1, n_budget - n1);
        }
    };

    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
    if (threads == 1) {
        work(0, count);
    } else {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (count + threads - 1) / threads;
        for (unsigned w = 0; w < threads; ++w) {
            const std::size_t begin = w * chunk;
            const std::size_t end = std::min(count, begin + chunk);
            if (begin < end)
                pool.emplace_back(work, begin, end);
        }
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i < count; ++i)
        if (scored[i]->min_rate > scored[best]->min_rate)
            best = i;
    DeploymentResult out = std::move(*scored[best]);
    out.strategy = DeploymentStrategy::Hybrid;
    return out;
}

std::vector<double> allocation_profile(const Scenario &scenario, int n_budget)
{
    std::vector<double> out;
    for (int n1 = 0; n1 <= n_budget; ++n1)
        out.push_back(evaluate_split(scenario, n1, n_budget - n1).min_rate);
    return out;
}

} // namespace airground
