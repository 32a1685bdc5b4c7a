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

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace airground {

/// Cartesian position in meters; z is altitude above ground.
struct Position3D {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend bool operator==(const Position3D &, const Position3D &) = default;

    Position3D operator+(const Position3D &o) const { return {x + o.x, y + o.y, z + o.z}; }
    Position3D operator-(const Position3D &o) const { return {x - o.x, y - o.y, z - o.z}; }
    Position3D operator*(double s) const { return {x * s, y * s, z * s}; }

    double dot(const Position3D &o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const { return std::sqrt(dot(*this)); }
};

inline double distance(const Position3D &a, const Position3D &b) { return (a - b).norm(); }

/// Transmit power, receiver noise and the large-scale gain at the 1 m
/// reference distance. Defaults put the data-collection scenario in a
/// moderate-SNR regime (P/sigma^2 = 100 dB, g0 = -30 dB).
struct RadioParams {
    double tx_power_w = 0.1;
    double noise_power_w = 1e-11;
    double ref_path_gain_db = -30.0;

    static constexpr double kReferenceDistance = 1.0;

    friend bool operator==(const RadioParams &, const RadioParams &) = default;

    double ref_gain_linear() const { return std::pow(10.0, ref_path_gain_db / 10.0); }
    double snr_scale() const { return tx_power_w / noise_power_w; }

    /// Throws ConfigError when powers are non-positive or g0 > 0 dB.
    void validate() const;
};

struct PathLossModel {
    double exponent = 2.0;

    friend bool operator==(const PathLossModel &, const PathLossModel &) = default;
};

enum class LinkState : std::uint8_t { LoS, NLoS, Blocked };

std::string_view to_string(LinkState s);

/// Unordered pair of node or surface identifiers.
class NodePair {
public:
    NodePair(std::string a, std::string b);

    const std::string &first() const { return first_; }
    const std::string &second() const { return second_; }

    friend bool operator==(const NodePair &, const NodePair &) = default;
    friend auto operator<=>(const NodePair &, const NodePair &) = default;

private:
    std::string first_;
    std::string second_;
};

/// Altitude-gated link state. The link is LoS once the aerial endpoint
/// reaches `min_altitude_for_los`; below that it takes `fallback`.
struct LinkStateRule {
    NodePair endpoints;
    double min_altitude_for_los = 0.0;
    LinkState fallback = LinkState::NLoS;

    friend bool operator==(const LinkStateRule &, const LinkStateRule &) = default;
};

using LinkStateRuleSet = std::map<NodePair, LinkStateRule>;

/// g0 * d^-alpha with d clamped below at the reference distance.
/// Throws DomainError for negative or non-finite d.
double path_gain(double d, const PathLossModel &model, const RadioParams &radio);

LinkState resolve_link_state(const LinkStateRule &rule, double aerial_altitude);

/// Looks the pair up in `rules`; a missing rule is a ConfigError.
LinkState resolve_link_state(const NodePair &pair, double aerial_altitude,
                             const LinkStateRuleSet &rules);

/// time_fraction * log2(1 + snr).
double rate_bps_hz(double snr, double time_fraction = 1.0);

} // namespace airground
