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

#include "airground/channel.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace airground {

enum class SurfaceKind : std::uint8_t { Terrestrial, AerialMounted };

std::string_view to_string(SurfaceKind k);

/// A reflecting surface. Terrestrial surfaces are wall-mounted and only
/// reflect into their front half-space; aerial ones reflect panoramically
/// toward the ground but need LoS to the node.
struct IrsSurface {
    std::string id;
    SurfaceKind kind = SurfaceKind::Terrestrial;
    Position3D position;
    int num_elements = 0;
    Position3D facing_normal{0.0, 0.0, 0.0};      // Terrestrial only
    std::optional<double> coverage_radius;        // Terrestrial only; unbounded if empty
    std::optional<std::set<std::string>> covered_node_ids;

    friend bool operator==(const IrsSurface &, const IrsSurface &) = default;
};

/// Transmitter -> surface -> receiver path with identical per-element legs.
struct CascadedLink {
    double src_distance = 0.0;
    double dst_distance = 0.0;
    PathLossModel src_model;
    PathLossModel dst_model;
    int elements = 0;

    /// sqrt(g(d_src)) * sqrt(g(d_dst)); decays with the distance product.
    double per_element_amplitude(const RadioParams &radio) const;
};

/// Whether `surface` can serve the node at `node_pos`. `node_id` is only
/// consulted when the surface carries an explicit covered set.
bool covers(const IrsSurface &surface, const Position3D &node_pos, LinkState link_state,
            const std::string &node_id = {});

/// Receive SNR with the direct path and the N reflected paths phase-aligned:
/// P * (sqrt(g_direct) + N * a)^2 / sigma^2.
double effective_snr(double direct_gain, const std::optional<CascadedLink> &cascaded,
                     const RadioParams &radio);

/// Amplitude-domain variant used by the optimizers, which already hold the
/// per-element amplitude.
double effective_snr_from_amplitudes(double direct_amplitude, int elements,
                                     double per_element_amplitude, const RadioParams &radio);

/// Lowest altitude at which every required node is LoS to the aerial
/// surface: the largest LoS threshold among them, 0 for an empty set.
double min_serving_altitude(const IrsSurface &surface,
                            const std::vector<std::string> &required_los_nodes,
                            const LinkStateRuleSet &rules);

} // namespace airground
