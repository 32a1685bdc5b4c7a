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

#include "airground/trajectory.hpp"

#include "airground/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace airground {

namespace {

constexpr double kSpeedTolerance = 1e-10;
constexpr double kFiniteDifferenceStep = 1e-4;

double amplitude(double d, LinkState state, const PathLossModel &los,
                 const std::optional<PathLossModel> &nlos, const RadioParams &radio)
{
    switch (state) {
    case LinkState::LoS:
        return std::sqrt(path_gain(d, los, radio));
    case LinkState::NLoS:
        if (!nlos)
            throw ConfigError("link resolved NLoS but its class has no NLoS exponent");
        return std::sqrt(path_gain(d, *nlos, radio));
    case LinkState::Blocked:
        break;
    }
    return 0.0;
}

struct ClassModels {
    PathLossModel los;
    std::optional<PathLossModel> nlos;
};

ClassModels class_models(const Scenario &s, const char *cls)
{
    const auto it = s.path_loss.find(cls);
    if (it == s.path_loss.end())
        throw ConfigError(std::string("no path-loss class '") + cls + "'");
    return {it->second.los, it->second.nlos};
}

} // namespace

double Trajectory::max_segment() const
{
    double worst = 0.0;
    for (std::size_t t = 0; t + 1 < waypoints.size(); ++t)
        worst = std::max(worst, distance(waypoints[t], waypoints[t + 1]));
    return worst;
}

Trajectory Trajectory::straight(const TrajectoryConstraints &c, std::size_t slots)
{
    if (slots == 0)
        throw DomainError("trajectory needs at least one slot");
    Trajectory out;
    out.slot_duration = c.slot_duration;
    out.waypoints.resize(slots + 1);
    for (std::size_t i = 0; i <= slots; ++i) {
        const double s = static_cast<double>(i) / static_cast<double>(slots);
        out.waypoints[i] = c.start + (c.end - c.start) * s;
    }
    out.waypoints.front() = c.start;
    out.waypoints.back() = c.end;
    return out;
}

CollectionChannel::CollectionChannel(const Scenario &scenario) : radio_(scenario.radio)
{
    const std::string uav_id = scenario.is_trajectory() ? scenario.trajectory().uav_id : "UAV";
    const ClassModels direct = class_models(scenario, link_class::kDirect);
    const double uav_altitude =
        scenario.is_trajectory() ? scenario.trajectory().constraints.fixed_altitude : 0.0;

    for (const auto &node : scenario.nodes) {
        if (node.role != NodeRole::SensorNode)
            continue;
        Sensor s;
        s.id = node.id;
        s.position = node.position;

        const LinkState direct_state =
            resolve_link_state(scenario.rule(uav_id, node.id), std::max(uav_altitude, node.position.z));
        s.direct_state = direct_state;
        if (direct_state == LinkState::LoS)
            s.direct_model = direct.los;
        else if (direct_state == LinkState::NLoS) {
            if (!direct.nlos)
                throw ConfigError("link " + uav_id + "-" + node.id + " is NLoS but class 'direct' has no NLoS exponent");
            s.direct_model = *direct.nlos;
        }

        for (std::size_t i = 0; i < scenario.surfaces.size(); ++i) {
            const IrsSurface &surf = scenario.surfaces[i];
            if (surf.num_elements == 0)
                continue;
            const LinkState leg_state =
                scenario.link_state(surf.id, surf.position, node.id, node.position);
            if (!covers(surf, node.position, leg_state, node.id))
                continue;
            const ClassModels node_leg = class_models(scenario, link_class::kIrsNode);
            const ClassModels uav_leg = class_models(scenario, link_class::kUavIrs);
            s.surface = i;
            s.surface_position = surf.position;
            s.elements = surf.num_elements;
            s.node_leg_amplitude = amplitude(distance(node.position, surf.position), leg_state,
                                             node_leg.los, node_leg.nlos, radio_);
            s.uav_leg_state = resolve_link_state(scenario.rule(uav_id, surf.id),
                                                 std::max(uav_altitude, surf.position.z));
            if (s.uav_leg_state == LinkState::LoS)
                s.uav_leg_model = uav_leg.los;
            else if (s.uav_leg_state == LinkState::NLoS) {
                if (!uav_leg.nlos)
                    throw ConfigError("link " + uav_id + "-" + surf.id + " is NLoS but class 'uav_irs' has no NLoS exponent");
                s.uav_leg_model = *uav_leg.nlos;
            }
            break;
        }
        sensors_.push_back(std::move(s));
    }
}

double CollectionChannel::snr(std::size_t k, const Position3D &uav) const
{
    const Sensor &s = sensors_.at(k);
    const double direct = s.direct_state == LinkState::Blocked
                              ? 0.0
                              : std::sqrt(path_gain(distance(uav, s.position), s.direct_model, radio_));
    double per_element = 0.0;
    if (s.surface && s.elements > 0 && s.uav_leg_state != LinkState::Blocked)
        per_element = s.node_leg_amplitude *
                      std::sqrt(path_gain(distance(uav, s.surface_position), s.uav_leg_model, radio_));
    return effective_snr_from_amplitudes(direct, s.elements, per_element, radio_);
}

double CollectionChannel::rate(std::size_t k, const Position3D &uav) const
{
    return rate_bps_hz(snr(k, uav));
}

RateMatrix CollectionChannel::rates(const Trajectory &trajectory) const
{
    const std::size_t slots = trajectory.slots();
    RateMatrix out(nodes(), slots);
    for (std::size_t t = 0; t < slots; ++t)
        for (std::size_t k = 0; k < nodes(); ++k)
            out(k, t) = rate(k, trajectory.waypoints[t]);
    return out;
}

RateMatrix per_slot_rates(const Scenario &scenario, const Trajectory &trajectory)
{
    return CollectionChannel(scenario).rates(trajectory);
}

std::vector<double> average_rates(const RateMatrix &rates, const Schedule &schedule,
                                  double slot_duration)
{
    auto out = node_throughputs(rates, schedule, slot_duration);
    const double horizon = static_cast<double>(rates.slots()) * slot_duration;
    for (double &r : out)
        r = horizon > 0.0 ? r / horizon : 0.0;
    return out;
}

namespace {

bool speed_feasible(const std::vector<Position3D> &w, double max_step)
{
    for (std::size_t t = 0; t + 1 < w.size(); ++t)
        if (distance(w[t], w[t + 1]) > max_step + kSpeedTolerance)
            return false;
    return true;
}

void clip_segment(std::vector<Position3D> &w, std::size_t i, double max_step)
{
    const std::size_t last = w.size() - 1;
    const Position3D d = w[i + 1] - w[i];
    const double len = d.norm();
    if (len <= max_step)
        return;
    const Position3D u = d * (1.0 / len);
    const double excess = len - max_step;
    const bool head_fixed = i == 0;
    const bool tail_fixed = i + 1 == last;
    if (head_fixed && tail_fixed)
        return;
    if (head_fixed)
        w[i + 1] = w[i + 1] - u * excess;
    else if (tail_fixed)
        w[i] = w[i] + u * excess;
    else {
        w[i] = w[i] + u * (0.5 * excess);
        w[i + 1] = w[i + 1] - u * (0.5 * excess);
    }
}

// Largest lambda in [0, 1] keeping reference + lambda * (candidate - reference)
// within the per-segment bound. The feasible set is convex and contains
// the reference, so every smaller lambda is feasible as well.
double max_feasible_blend(const std::vector<Position3D> &ref, const std::vector<Position3D> &cand,
                          double max_step)
{
    double lambda = 1.0;
    const double d2 = max_step * max_step;
    for (std::size_t t = 0; t + 1 < ref.size(); ++t) {
        const Position3D a = ref[t + 1] - ref[t];
        const Position3D b = (cand[t + 1] - cand[t]) - a;
        if ((a + b).dot(a + b) <= d2)
            continue;
        const double bb = b.dot(b);
        if (bb == 0.0)
            continue;
        const double ab = a.dot(b);
        const double disc = std::max(0.0, ab * ab - bb * (a.dot(a) - d2));
        const double root = (-ab + std::sqrt(disc)) / bb;
        lambda = std::min(lambda, std::clamp(root, 0.0, 1.0));
    }
    return lambda;
}

} // namespace

Trajectory project_speed_feasible(const Trajectory &candidate, const Trajectory &reference,
                                  double max_step)
{
    if (candidate.waypoints.size() != reference.waypoints.size())
        throw DomainError("project_speed_feasible: candidate and reference differ in length");
    Trajectory out = candidate;
    auto &w = out.waypoints;
    if (w.size() < 2)
        return out;

    constexpr int kMaxSweeps = 200;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (sweep % 2 == 0)
            for (std::size_t i = 0; i + 1 < w.size(); ++i)
                clip_segment(w, i, max_step);
        else
            for (std::size_t i = w.size() - 1; i-- > 0;)
                clip_segment(w, i, max_step);
        if (speed_feasible(w, max_step))
            return out;
    }

    double lambda = max_feasible_blend(reference.waypoints, w, max_step);
    for (int attempt = 0; attempt < 64; ++attempt) {
        Trajectory blended = reference;
        for (std::size_t t = 1; t + 1 < w.size(); ++t)
            blended.waypoints[t] = reference.waypoints[t] + (w[t] - reference.waypoints[t]) * lambda;
        if (speed_feasible(blended.waypoints, max_step))
            return blended;
        lambda *= 0.5;
    }
    return reference;
}

Trajectory resample(const Trajectory &trajectory, std::size_t slots,
                    const TrajectoryConstraints &constraints)
{
    Trajectory line = Trajectory::straight(constraints, slots);
    const std::size_t old_slots = trajectory.slots();
    if (old_slots == 0)
        return line;
    Trajectory out = line;
    for (std::size_t i = 1; i < slots; ++i) {
        const double s = static_cast<double>(i) * static_cast<double>(old_slots) /
                         static_cast<double>(slots);
        const auto idx = std::min(static_cast<std::size_t>(s), old_slots - 1);
        const double frac = s - static_cast<double>(idx);
        out.waypoints[i] = trajectory.waypoints[idx] +
                           (trajectory.waypoints[idx + 1] - trajectory.waypoints[idx]) * frac;
    }
    if (!speed_feasible(line.waypoints, constraints.max_step()))
        throw DomainError("resample: straight flight is not speed-feasible for this slot count");
    return project_speed_feasible(out, line, constraints.max_step());
}

std::optional<Trajectory> hover_tour(const TrajectoryConstraints &constraints, std::size_t slots,
                                     const std::vector<Position3D> &anchors)
{
    const double step = constraints.max_step();
    if (slots == 0 || !(step > 0.0))
        return std::nullopt;
    std::vector<Position3D> stops;
    stops.push_back(constraints.start);
    for (Position3D a : anchors) {
        a.z = constraints.start.z;
        stops.push_back(a);
    }
    stops.push_back(constraints.end);

    std::vector<std::size_t> leg_slots(stops.size() - 1);
    std::size_t travel = 0;
    for (std::size_t i = 0; i + 1 < stops.size(); ++i) {
        const double len = distance(stops[i], stops[i + 1]);
        leg_slots[i] = static_cast<std::size_t>(std::ceil(len / step - 1e-9));
        travel += leg_slots[i];
    }
    if (travel > slots)
        return std::nullopt;
    const std::size_t spare = slots - travel;

    Trajectory out;
    out.slot_duration = constraints.slot_duration;
    out.waypoints.reserve(slots + 1);
    out.waypoints.push_back(constraints.start);
    for (std::size_t i = 0; i + 1 < stops.size(); ++i) {
        const std::size_t n = leg_slots[i];
        for (std::size_t s = 1; s <= n; ++s)
            out.waypoints.push_back(stops[i] + (stops[i + 1] - stops[i]) *
                                                   (static_cast<double>(s) / static_cast<double>(n)));
        if (i + 2 < stops.size()) {
            const std::size_t hover = spare / anchors.size() + (i < spare % anchors.size() ? 1 : 0);
            out.waypoints.insert(out.waypoints.end(), hover, stops[i + 1]);
        }
    }
    if (anchors.empty())
        out.waypoints.insert(out.waypoints.end() - 1, spare, constraints.end);
    out.waypoints.back() = constraints.end;
    return out;
}

std::vector<Position3D> tour_order(const TrajectoryConstraints &constraints,
                                   std::vector<Position3D> anchors)
{
    auto flat = [&](Position3D p) {
        p.z = constraints.start.z;
        return p;
    };
    std::vector<Position3D> order;
    Position3D here = constraints.start;
    while (!anchors.empty()) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < anchors.size(); ++i)
            if (distance(here, flat(anchors[i])) < distance(here, flat(anchors[best])))
                best = i;
        here = flat(anchors[best]);
        order.push_back(anchors[best]);
        anchors.erase(anchors.begin() + static_cast<std::ptrdiff_t>(best));
    }

    // Path stops[0..n+1] with pinned ends; reverse inner runs while it helps.
    auto stop = [&](std::size_t i) {
        if (i == 0)
            return constraints.start;
        if (i == order.size() + 1)
            return constraints.end;
        return flat(order[i - 1]);
    };
    bool improved = true;
    while (improved) {
        improved = false;
        for (std::size_t i = 1; i <= order.size(); ++i)
            for (std::size_t j = i + 1; j <= order.size(); ++j) {
                const double before = distance(stop(i - 1), stop(i)) + distance(stop(j), stop(j + 1));
                const double after = distance(stop(i - 1), stop(j)) + distance(stop(i), stop(j + 1));
                if (after < before - 1e-9) {
                    std::reverse(order.begin() + static_cast<std::ptrdiff_t>(i - 1),
                                 order.begin() + static_cast<std::ptrdiff_t>(j));
                    improved = true;
                }
            }
    }
    return order;
}

std::vector<Trajectory> initial_candidates(const CollectionChannel &channel,
                                           const TrajectoryConstraints &constraints,
                                           std::size_t slots)
{
    std::vector<Trajectory> out{Trajectory::straight(constraints, slots)};
    std::vector<Position3D> all;
    std::vector<Position3D> unserved;
    for (std::size_t k = 0; k < channel.nodes(); ++k) {
        all.push_back(channel.node_position(k));
        if (!channel.serving_surface(k))
            unserved.push_back(channel.node_position(k));
    }
    for (const auto *set : {&all, &unserved}) {
        if (set->empty() || (set == &unserved && unserved.size() == all.size()))
            continue;
        if (auto tour = hover_tour(constraints, slots, tour_order(constraints, *set)))
            out.push_back(std::move(*tour));
    }
    return out;
}

namespace {

// Softmin weights of the average rates, normalized to sum to one.
std::vector<double> softmin_weights(const std::vector<double> &avg, double temperature)
{
    const double lo = *std::min_element(avg.begin(), avg.end());
    std::vector<double> w(avg.size());
    double sum = 0.0;
    for (std::size_t k = 0; k < avg.size(); ++k) {
        w[k] = std::exp(-(avg[k] - lo) / temperature);
        sum += w[k];
    }
    for (double &x : w)
        x /= sum;
    return w;
}

double hard_min(const std::vector<double> &v) { return *std::min_element(v.begin(), v.end()); }

} // namespace

TrajectoryUpdate improve_trajectory(const CollectionChannel &channel, const Trajectory &trajectory,
                                    const Schedule &schedule, const TrajectoryConstraints &constraints,
                                    const SolverSettings &settings, double initial_step)
{
    TrajectoryUpdate out;
    out.trajectory = trajectory;
    const std::size_t slots = trajectory.slots();
    const std::size_t nodes = channel.nodes();
    const double dt = trajectory.slot_duration;
    const RateMatrix rates = channel.rates(trajectory);
    out.schedule.schedule = schedule;
    out.schedule.min_throughput = nodes == 0 ? 0.0 : hard_min(node_throughputs(rates, schedule, dt));

    if (nodes == 0 || slots < 2 || !(initial_step > 0.0))
        return out;

    const auto weights =
        softmin_weights(average_rates(rates, schedule, dt), settings.softmin_temperature);
    const double horizon = trajectory.mission_time();

    // Only slot t depends on waypoint t, so the objective's finite-difference
    // gradient reduces to per-waypoint differences of the per-slot rates.
    std::vector<Position3D> grad(slots + 1);
    double largest = 0.0;
    for (std::size_t t = 1; t < slots; ++t) {
        const Position3D &q = trajectory.waypoints[t];
        Position3D g;
        for (std::size_t k = 0; k < nodes; ++k) {
            const double coef = weights[k] * schedule.fractions(k, t) * dt / horizon;
            if (coef == 0.0)
                continue;
            const Position3D dx{kFiniteDifferenceStep, 0.0, 0.0};
            const Position3D dy{0.0, kFiniteDifferenceStep, 0.0};
            g.x += coef * (channel.rate(k, q + dx) - channel.rate(k, q - dx)) / (2.0 * kFiniteDifferenceStep);
            g.y += coef * (channel.rate(k, q + dy) - channel.rate(k, q - dy)) / (2.0 * kFiniteDifferenceStep);
        }
        grad[t] = g;
        largest = std::max(largest, g.norm());
    }
    if (!(largest > 0.0))
        return out;

    const double baseline = out.schedule.min_throughput;
    double step = initial_step;
    for (int attempt = 0; attempt <= settings.line_search_backtracks; ++attempt, step *= settings.line_search_shrink) {
        Trajectory cand = trajectory;
        for (std::size_t t = 1; t < slots; ++t)
            cand.waypoints[t] = cand.waypoints[t] + grad[t] * (step / largest);
        cand = project_speed_feasible(cand, trajectory, constraints.max_step());
        if (cand == trajectory)
            continue;
        ScheduleSolution sol = optimal_schedule(channel.rates(cand), dt);
        if (sol.min_throughput > baseline + 1e-12 * std::max(1.0, std::abs(baseline))) {
            out.trajectory = std::move(cand);
            out.schedule = std::move(sol);
            out.accepted = true;
            out.step = step;
            return out;
        }
    }
    return out;
}

Trajectory improve_trajectory(const Scenario &scenario, const Trajectory &trajectory,
                              const Schedule &schedule)
{
    const auto &exp = scenario.trajectory();
    const double step = distance(exp.constraints.start, exp.constraints.end) / 4.0;
    return improve_trajectory(CollectionChannel(scenario), trajectory, schedule, exp.constraints,
                              exp.solver, step)
        .trajectory;
}

InnerSolve maximize_min_rate(const CollectionChannel &channel, Trajectory initial,
                             const TrajectoryConstraints &constraints,
                             const SolverSettings &settings, std::optional<double> stop_at_rate)
{
    InnerSolve out;
    const double dt = initial.slot_duration;
    const double horizon = initial.mission_time();
    ScheduleSolution sol = optimal_schedule(channel.rates(initial), dt);
    out.trajectory = std::move(initial);
    out.schedule = sol.schedule;
    out.min_throughput = sol.min_throughput;
    out.min_rate = out.min_throughput / horizon;
    out.objective_history.push_back(out.min_rate);

    const double span = std::max(distance(constraints.start, constraints.end), constraints.max_step());
    double step = 0.25 * span;
    for (int it = 0; it < settings.max_iterations; ++it) {
        if (stop_at_rate && out.min_rate >= *stop_at_rate) {
            out.reached_target = true;
            break;
        }
        TrajectoryUpdate upd =
            improve_trajectory(channel, out.trajectory, out.schedule, constraints, settings, step);
        if (!upd.accepted)
            break;
        ++out.iterations;
        const double previous = out.min_throughput;
        if (upd.schedule.min_throughput < previous)
            ++out.monotonicity_violations;
        out.trajectory = std::move(upd.trajectory);
        out.schedule = std::move(upd.schedule.schedule);
        out.min_throughput = upd.schedule.min_throughput;
        out.min_rate = out.min_throughput / horizon;
        out.objective_history.push_back(out.min_rate);
        step = std::min(2.0 * upd.step, span);

        const double change = (out.min_throughput - previous) / std::max(std::abs(previous), 1e-300);
        if (change < settings.relative_tolerance)
            break;
    }
    if (stop_at_rate && out.min_rate >= *stop_at_rate)
        out.reached_target = true;
    return out;
}

MissionResult min_time_mission(const Scenario &scenario, const TrajectoryConstraints &constraints,
                               double rate_target, const SolverSettings &settings, double max_time)
{
    if (!(rate_target > 0.0) || !std::isfinite(rate_target))
        throw DomainError("min_time_mission: rate target must be positive");
    if (!(constraints.v_max > 0.0) || !(constraints.slot_duration > 0.0))
        throw DomainError("min_time_mission: v_max and slot duration must be positive");

    const CollectionChannel channel(scenario);
    const double dt = constraints.slot_duration;
    const double length = distance(constraints.start, constraints.end);
    const auto min_slots = static_cast<std::size_t>(
        std::max(1.0, std::ceil(length / constraints.max_step() - 1e-9)));
    const auto max_slots = static_cast<std::size_t>(std::floor(max_time / dt + 1e-9));
    if (max_slots < min_slots)
        throw DomainError("min_time_mission: max_time is shorter than the straight flight time");

    MissionResult result;
    for (std::size_t k = 0; k < channel.nodes(); ++k)
        result.node_ids.push_back(channel.node_id(k));

    // Starts from whichever candidate path has the best scheduled min rate;
    // ties keep the earlier candidate.
    auto probe = [&](std::size_t slots, const Trajectory *warm) {
        std::vector<Trajectory> starts = initial_candidates(channel, constraints, slots);
        if (warm)
            starts.insert(starts.begin(), resample(*warm, slots, constraints));
        std::size_t pick = 0;
        double pick_value = -1.0;
        for (std::size_t i = 0; i < starts.size(); ++i) {
            const double v = optimal_schedule(channel.rates(starts[i]), dt).min_throughput;
            if (v > pick_value) {
                pick = i;
                pick_value = v;
            }
        }
        InnerSolve inner =
            maximize_min_rate(channel, std::move(starts[pick]), constraints, settings, rate_target);
        BisectionProbe p;
        p.slots = slots;
        p.mission_time = static_cast<double>(slots) * dt;
        p.achieved_min_rate = inner.min_rate;
        p.feasible = inner.min_rate >= rate_target;
        p.iterations = inner.iterations;
        p.monotonicity_violations = inner.monotonicity_violations;
        p.objective_history = inner.objective_history;
        result.probes.push_back(std::move(p));
        return inner;
    };

    auto finish = [&](InnerSolve &&inner, bool feasible, bool converged) {
        result.trajectory = std::move(inner.trajectory);
        result.schedule = std::move(inner.schedule);
        result.mission_time = result.trajectory.mission_time();
        result.per_node_rates =
            average_rates(channel.rates(result.trajectory), result.schedule, dt);
        result.achieved_min_rate = result.per_node_rates.empty() ? 0.0 : hard_min(result.per_node_rates);
        result.iterations = inner.iterations;
        result.feasible = feasible;
        result.converged = converged;
        return result;
    };

    InnerSolve lo_solve = probe(min_slots, nullptr);
    if (result.probes.back().feasible)
        return finish(std::move(lo_solve), true, true);

    InnerSolve hi_solve = probe(max_slots, nullptr);
    if (!result.probes.back().feasible)
        return finish(std::move(hi_solve), false, false);

    std::size_t lo = min_slots;
    std::size_t hi = max_slots;
    while (hi - lo > 1) {
        const std::size_t mid = lo + (hi - lo) / 2;
        InnerSolve mid_solve = probe(mid, &hi_solve.trajectory);
        if (result.probes.back().feasible) {
            hi = mid;
            hi_solve = std::move(mid_solve);
        } else {
            lo = mid;
        }
    }
    return finish(std::move(hi_solve), true, true);
}

MissionResult min_time_mission(const Scenario &scenario)
{
    const auto &exp = scenario.trajectory();
    return min_time_mission(scenario, exp.constraints, exp.rate_target, exp.solver, exp.max_time);
}

} // namespace airground
