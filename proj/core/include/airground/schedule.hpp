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

#include <cstddef>
#include <span>
#include <vector>

namespace airground {

/// Dense node x slot table, row-major by node.
class NodeSlotMatrix {
public:
    NodeSlotMatrix() = default;
    NodeSlotMatrix(std::size_t nodes, std::size_t slots, double fill = 0.0)
        : nodes_(nodes), slots_(slots), values_(nodes * slots, fill)
    {
    }

    std::size_t nodes() const { return nodes_; }
    std::size_t slots() const { return slots_; }

    double &operator()(std::size_t k, std::size_t t) { return values_[k * slots_ + t]; }
    double operator()(std::size_t k, std::size_t t) const { return values_[k * slots_ + t]; }

    std::span<const double> row(std::size_t k) const
    {
        return {values_.data() + k * slots_, slots_};
    }

    friend bool operator==(const NodeSlotMatrix &, const NodeSlotMatrix &) = default;

private:
    std::size_t nodes_ = 0;
    std::size_t slots_ = 0;
    std::vector<double> values_;
};

/// Per-slot achievable rate of each node, bps/Hz.
using RateMatrix = NodeSlotMatrix;

/// TDMA time-sharing fractions; each slot's column sums to at most one.
struct Schedule {
    NodeSlotMatrix fractions;

    /// Largest violation of the per-slot budget or of non-negativity.
    double max_violation() const;
};

/// Per-node data volume sum_t tau[k][t] * slot * R[k][t].
std::vector<double> node_throughputs(const RateMatrix &rates, const Schedule &schedule,
                                     double slot_duration);

struct ScheduleSolution {
    Schedule schedule;
    double min_throughput = 0.0; // bps/Hz * s
    std::size_t columns_generated = 0;
};

/// Max-min TDMA allocation for a fixed trajectory:
///   maximize m  s.t.  sum_t tau[k][t]*slot*R[k][t] >= m,  sum_k tau[k][t] <= 1,  tau >= 0.
///
/// Solved by column generation over whole-slot assignments: the master LP
/// has one row per node plus a convexity row, and pricing a column under
/// node weights w assigns each slot to argmax_k w_k R[k][t] (smallest k on
/// ties). The returned schedule is the convex combination of the generated
/// assignments. If some node has zero rate in every slot the all-zero
/// schedule with m = 0 is returned.
ScheduleSolution optimal_schedule(const RateMatrix &rates, double slot_duration);

} // namespace airground
