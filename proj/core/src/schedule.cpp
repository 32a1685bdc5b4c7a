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

#include "airground/schedule.hpp"

#include "airground/errors.hpp"
#include "airground/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace airground {

double Schedule::max_violation() const
{
    double worst = 0.0;
    for (std::size_t t = 0; t < fractions.slots(); ++t) {
        double sum = 0.0;
        for (std::size_t k = 0; k < fractions.nodes(); ++k) {
            worst = std::max(worst, -fractions(k, t));
            sum += fractions(k, t);
        }
        worst = std::max(worst, sum - 1.0);
    }
    return worst;
}

std::vector<double> node_throughputs(const RateMatrix &rates, const Schedule &schedule,
                                     double slot_duration)
{
    std::vector<double> out(rates.nodes(), 0.0);
    for (std::size_t k = 0; k < rates.nodes(); ++k)
        for (std::size_t t = 0; t < rates.slots(); ++t)
            out[k] += schedule.fractions(k, t) * slot_duration * rates(k, t);
    return out;
}

namespace {

// A whole-slot assignment: owner[t] is the node served in slot t, or -1.
struct Column {
    std::vector<int> owner;
    std::vector<double> yield; // per-node throughput
};

Column price(const RateMatrix &gain, std::span<const double> weights)
{
    Column col{std::vector<int>(gain.slots(), -1), std::vector<double>(gain.nodes(), 0.0)};
    for (std::size_t t = 0; t < gain.slots(); ++t) {
        double best = 0.0;
        int owner = -1;
        for (std::size_t k = 0; k < gain.nodes(); ++k) {
            const double v = weights[k] * gain(k, t);
            if (v > best) {
                best = v;
                owner = static_cast<int>(k);
            }
        }
        col.owner[t] = owner;
        if (owner >= 0)
            col.yield[static_cast<std::size_t>(owner)] += gain(static_cast<std::size_t>(owner), t);
    }
    return col;
}

} // namespace

ScheduleSolution optimal_schedule(const RateMatrix &rates, double slot_duration)
{
    if (!(slot_duration > 0.0))
        throw DomainError("optimal_schedule: slot duration must be positive");
    const std::size_t nodes = rates.nodes();
    const std::size_t slots = rates.slots();

    ScheduleSolution out;
    out.schedule.fractions = NodeSlotMatrix(nodes, slots, 0.0);
    if (nodes == 0 || slots == 0)
        return out;

    RateMatrix gain(nodes, slots);
    for (std::size_t k = 0; k < nodes; ++k) {
        bool any = false;
        for (std::size_t t = 0; t < slots; ++t) {
            if (!(rates(k, t) >= 0.0))
                throw DomainError("optimal_schedule: rates must be non-negative");
            gain(k, t) = slot_duration * rates(k, t);
            any = any || gain(k, t) > 0.0;
        }
        if (!any)
            return out;
    }

    std::vector<Column> columns;
    for (std::size_t k = 0; k < nodes; ++k) {
        std::vector<double> w(nodes, 0.0);
        w[k] = 1.0;
        columns.push_back(price(gain, w));
    }
    columns.push_back(price(gain, std::vector<double>(nodes, 1.0 / static_cast<double>(nodes))));

    double scale = 0.0;
    for (std::size_t k = 0; k < nodes; ++k)
        for (std::size_t t = 0; t < slots; ++t)
            scale = std::max(scale, gain(k, t));

    lp::Solution master;
    const std::size_t max_rounds = 20 * (nodes + slots) + 100;
    for (std::size_t round = 0; round < max_rounds; ++round) {
        // Variables: lambda_0..lambda_{J-1}, m. Rows: one per node, convexity.
        const std::size_t J = columns.size();
        lp::Problem p(nodes + 1, J + 1);
        for (std::size_t k = 0; k < nodes; ++k) {
            for (std::size_t j = 0; j < J; ++j)
                p.at(k, j) = -columns[j].yield[k] / scale;
            p.at(k, J) = 1.0;
        }
        for (std::size_t j = 0; j < J; ++j)
            p.at(nodes, j) = 1.0;
        p.b[nodes] = 1.0;
        p.c[J] = 1.0;
        master = lp::solve(p);
        if (master.status != lp::Status::Optimal)
            throw std::runtime_error("optimal_schedule: master LP did not reach optimality");

        std::span<const double> weights(master.duals.data(), nodes);
        const double convexity_price = master.duals[nodes];
        Column candidate = price(gain, weights);
        double value = 0.0;
        for (std::size_t k = 0; k < nodes; ++k)
            value += weights[k] * candidate.yield[k] / scale;
        if (value - convexity_price <= 1e-10 * std::max(1.0, convexity_price))
            break;
        const bool duplicate = std::any_of(columns.begin(), columns.end(), [&](const Column &c) {
            return c.owner == candidate.owner;
        });
        if (duplicate)
            break;
        columns.push_back(std::move(candidate));
        out.columns_generated = columns.size();
    }
    out.columns_generated = columns.size();

    for (std::size_t j = 0; j < columns.size(); ++j) {
        const double lambda = master.x[j];
        if (lambda <= 0.0)
            continue;
        for (std::size_t t = 0; t < slots; ++t)
            if (columns[j].owner[t] >= 0)
                out.schedule.fractions(static_cast<std::size_t>(columns[j].owner[t]), t) += lambda;
    }
    // Round-off can push a column sum a hair above one.
    for (std::size_t t = 0; t < slots; ++t) {
        double sum = 0.0;
        for (std::size_t k = 0; k < nodes; ++k)
            sum += out.schedule.fractions(k, t);
        if (sum > 1.0)
            for (std::size_t k = 0; k < nodes; ++k)
                out.schedule.fractions(k, t) /= sum;
    }

    const auto throughput = node_throughputs(rates, out.schedule, slot_duration);
    out.min_throughput = *std::min_element(throughput.begin(), throughput.end());
    return out;
}

} // namespace airground
