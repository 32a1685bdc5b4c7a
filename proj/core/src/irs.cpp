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

#include "airground/errors.hpp"

#include <algorithm>
#include <cmath>

namespace airground {

std::string_view to_string(SurfaceKind k)
{
    return k == SurfaceKind::Terrestrial ? "terrestrial" : "aerial";
}

double CascadedLink::per_element_amplitude(const RadioParams &radio) const
{
    return std::sqrt(path_gain(src_distance, src_model, radio)) *
           std::sqrt(path_gain(dst_distance, dst_model, radio));
}

bool covers(const IrsSurface &surface, const Position3D &node_pos, LinkState link_state,
            const std::string &node_id)
{
    if (surface.kind == SurfaceKind::Terrestrial && surface.facing_normal.norm() == 0.0)
        throw ConfigError("surface '" + surface.id + "' has a zero-length facing normal");

    if (surface.covered_node_ids)
        return surface.covered_node_ids->contains(node_id);

    if (surface.kind == SurfaceKind::AerialMounted)
        return link_state == LinkState::LoS;

    const Position3D offset = node_pos - surface.position;
    if (!(offset.dot(surface.facing_normal) > 0.0))
        return false;
    return !surface.coverage_radius || offset.norm() <= *surface.coverage_radius;
}

double effective_snr_from_amplitudes(double direct_amplitude, int elements,
                                     double per_element_amplitude, const RadioParams &radio)
{
    if (!(direct_amplitude >= 0.0) || !(per_element_amplitude >= 0.0))
        throw DomainError("effective_snr: channel gains must be non-negative");
    if (elements < 0)
        throw DomainError("effective_snr: element count must be non-negative");
    const double amplitude = direct_amplitude + static_cast<double>(elements) * per_element_amplitude;
    return radio.snr_scale() * amplitude * amplitude;
}

double effective_snr(double direct_gain, const std::optional<CascadedLink> &cascaded,
                     const RadioParams &radio)
{
    if (!(direct_gain >= 0.0))
        throw DomainError("effective_snr: direct gain must be non-negative");
    if (!cascaded)
        return effective_snr_from_amplitudes(std::sqrt(direct_gain), 0, 0.0, radio);
    return effective_snr_from_amplitudes(std::sqrt(direct_gain), cascaded->elements,
                                         cascaded->per_element_amplitude(radio), radio);
}

double min_serving_altitude(const IrsSurface &surface,
                            const std::vector<std::string> &required_los_nodes,
                            const LinkStateRuleSet &rules)
{
    double altitude = 0.0;
    for (const auto &node : required_los_nodes) {
        const auto it = rules.find(NodePair(surface.id, node));
        if (it == rules.end())
            throw ConfigError("no link-state rule between '" + surface.id + "' and '" + node + "'");
        altitude = std::max(altitude, it->second.min_altitude_for_los);
    }
    return altitude;
}

} // namespace airground
