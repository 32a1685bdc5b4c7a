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

#include "airground/scenario.hpp"
#include "airground/schedule.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace airground {

/// Discretized UAV path: M slots, M + 1 waypoints. Slot t is served from
/// waypoint t; the final waypoint only pins the landing point.
struct Trajectory {
    std::vector<Position3D> waypoints;
    double slot_duration = 0.1;

    friend bool operator==(const Trajectory &, const Trajectory &) = default;

    std::size_t slots() const { return waypoints.empty() ? 0 : waypoints.size() - 1; }
    double mission_time() const { return static_cast<double>(slots()) * slot_duration; }
    double max_segment() const;

    /// Uniformly spaced straight flight from start to end over `slots` slots.
    static Trajectory straight(const TrajectoryConstraints &c, std::size_t slots);
};

/// Sensor-node channel field seen by a UAV at a given position: direct
/// UAV-node link plus, for nodes covered by a surface, the phase-aligned
/// cascaded node-surface-UAV path. Geometry is resolved once at
/// construction; rate() is pure.
class CollectionChannel {
public:
    explicit CollectionChannel(const Scenario &scenario);

    std::size_t nodes() const { return sensors_.size(); }
    const std::string &node_id(std::size_t k) const { return sensors_[k].id; }
    const Position3D &node_position(std::size_t k) const { return sensors_[k].position; }
    /// Index into scenario.surfaces of the surface serving node k, if any.
    /// Surfaces without elements never serve.
    std::optional<std::size_t> serving_surface(std::size_t k) const { return sensors_[k].surface; }

    double snr(std::size_t k, const Position3D &uav) const;
    double rate(std::size_t k, const Position3D &uav) const;
    RateMatrix rates(const Trajectory &trajectory) const;

private:
    struct Sensor {
        std::string id;
        Position3D position;
        LinkState direct_state = LinkState::LoS;
        PathLossModel direct_model;
        std::optional<std::size_t> surface;
        Position3D surface_position;
        int elements = 0;
        double node_leg_amplitude = 0.0; // sqrt(g) of the node-surface leg
        LinkState uav_leg_state = LinkState::LoS;
        PathLossModel uav_leg_model;
    };

    RadioParams radio_;
    std::vector<Sensor> sensors_;
};

RateMatrix per_slot_rates(const Scenario &scenario, const Trajectory &trajectory);

/// Moves interior waypoints so that every segment is at most `max_step`
/// long. Runs pairwise segment clipping sweeps, then, if a violation is
/// left, pulls the result back toward `reference` (which must be feasible)
/// along the straight line between them, as far as feasibility requires.
Trajectory project_speed_feasible(const Trajectory &candidate, const Trajectory &reference,
                                  double max_step);

/// Re-times `trajectory` onto `slots` slots by linear interpolation in
/// normalized time and restores speed feasibility against the straight path.
Trajectory resample(const Trajectory &trajectory, std::size_t slots,
                    const TrajectoryConstraints &constraints);

/// Fly-and-hover path over `slots` slots: start, then each anchor in the
/// given order, then end. Legs are flown at the speed limit and the spare
/// slots are split evenly as hovers over the anchors (projected onto the
/// flight altitude). Empty when the legs alone need more than `slots`.
std::optional<Trajectory> hover_tour(const TrajectoryConstraints &constraints, std::size_t slots,
                                     const std::vector<Position3D> &anchors);

/// Short visiting order for `anchors` between start and end: nearest
/// neighbour from start, refined by 2-opt with both endpoints pinned.
std::vector<Position3D> tour_order(const TrajectoryConstraints &constraints,
                                   std::vector<Position3D> anchors);

/// Starting paths for a given slot count: the straight flight, a hover tour
/// over every sensor, and a hover tour over the sensors no surface serves.
/// Infeasible tours are dropped; the straight flight is always first.
std::vector<Trajectory> initial_candidates(const CollectionChannel &channel,
                                           const TrajectoryConstraints &constraints,
                                           std::size_t slots);

struct TrajectoryUpdate {
    Trajectory trajectory;
    ScheduleSolution schedule; // optimal schedule for `trajectory`
    bool accepted = false;
    double step = 0.0;         // accepted step, meters of largest waypoint move
};

/// One block update of the interior waypoints for a fixed schedule: ascend
/// softmin_k of the scheduled average rates along a finite-difference
/// gradient, backtrack from `initial_step`, project onto the speed limit,
/// and accept the first candidate whose max-min value is strictly higher
/// than the scheduled hard-min of the input. Returns the input unchanged
/// (accepted = false) if no backtrack succeeds or the step is zero.
TrajectoryUpdate improve_trajectory(const CollectionChannel &channel, const Trajectory &trajectory,
                                    const Schedule &schedule, const TrajectoryConstraints &constraints,
                                    const SolverSettings &settings, double initial_step);

Trajectory improve_trajectory(const Scenario &scenario, const Trajectory &trajectory,
                              const Schedule &schedule);

struct InnerSolve {
    Trajectory trajectory;
    Schedule schedule;
    double min_throughput = 0.0;             // bps/Hz * s
    double min_rate = 0.0;                   // bps/Hz, averaged over the mission
    std::vector<double> objective_history;   // min_rate after each accepted iteration
    int iterations = 0;
    std::size_t monotonicity_violations = 0;
    bool reached_target = false;
};

/// Block-coordinate ascent of the max-min average rate for a fixed number
/// of slots, alternating optimal_schedule and improve_trajectory. Stops at
/// the iteration cap, on a relative objective change below tolerance, when
/// no trajectory step is accepted, or once `stop_at_rate` is reached.
InnerSolve maximize_min_rate(const CollectionChannel &channel, Trajectory initial,
                             const TrajectoryConstraints &constraints,
                             const SolverSettings &settings,
                             std::optional<double> stop_at_rate = std::nullopt);

struct BisectionProbe {
    std::size_t slots = 0;
    double mission_time = 0.0;
    double achieved_min_rate = 0.0;
    bool feasible = false;
    int iterations = 0;
    std::size_t monotonicity_violations = 0;
    std::vector<double> objective_history;
};

struct MissionResult {
    Trajectory trajectory;
    Schedule schedule;
    double mission_time = 0.0;
    double achieved_min_rate = 0.0;
    std::vector<double> per_node_rates;
    std::vector<std::string> node_ids;
    int iterations = 0;
    bool converged = false;
    bool feasible = false;
    std::vector<BisectionProbe> probes;
};

/// Shortest mission (a multiple of the slot duration, at most `max_time`)
/// whose max-min average rate reaches `rate_target`. Bisects on the slot
/// count. Each probe starts from the best of initial_candidates() and the
/// shortest feasible solution seen so far, resampled. When even `max_time`
/// is infeasible the result carries feasible = false and the best rate
/// achieved there.
MissionResult min_time_mission(const Scenario &scenario, const TrajectoryConstraints &constraints,
                               double rate_target, const SolverSettings &settings,
                               double max_time = 60.0);

/// Uses the scenario's own trajectory experiment block.
MissionResult min_time_mission(const Scenario &scenario);

/// (1/T) sum_t tau[k][t] * slot * R[k][t] per node.
std::vector<double> average_rates(const RateMatrix &rates, const Schedule &schedule,
                                  double slot_duration);

} // namespace airground
