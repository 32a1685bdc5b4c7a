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

#include "airground/channel.hpp"

#include "airground/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace airground {

void RadioParams::validate() const
{
    if (!(tx_power_w > 0.0) || !std::isfinite(tx_power_w))
        throw ConfigError("radio.tx_power_w must be a positive finite number");
    if (!(noise_power_w > 0.0) || !std::isfinite(noise_power_w))
        throw ConfigError("radio.noise_power_w must be a positive finite number");
    if (!(ref_path_gain_db <= 0.0) || !std::isfinite(ref_path_gain_db))
        throw ConfigError("radio.ref_path_gain_db must be <= 0 dB");
}

std::string_view to_string(LinkState s)
{
    switch (s) {
    case LinkState::LoS:
        return "los";
    case LinkState::NLoS:
        return "nlos";
    case LinkState::Blocked:
        return "blocked";
    }
    return "unknown";
}

NodePair::NodePair(std::string a, std::string b)
{
    if (b < a)
        std::swap(a, b);
    first_ = std::move(a);
    second_ = std::move(b);
}

double path_gain(double d, const PathLossModel &model, const RadioParams &radio)
{
    if (!std::isfinite(d) || d < 0.0)
        throw DomainError("path_gain: distance must be finite and non-negative, got " +
                          std::to_string(d));
    if (!(model.exponent >= 1.0))
        throw DomainError("path_gain: path-loss exponent must be >= 1");
    const double clamped = std::max(d, RadioParams::kReferenceDistance);
    return radio.ref_gain_linear() * std::pow(clamped, -model.exponent);
}

LinkState resolve_link_state(const LinkStateRule &rule, double aerial_altitude)
{
    return aerial_altitude >= rule.min_altitude_for_los ? LinkState::LoS : rule.fallback;
}

LinkState resolve_link_state(const NodePair &pair, double aerial_altitude,
                             const LinkStateRuleSet &rules)
{
    const auto it = rules.find(pair);
    if (it == rules.end())
        throw ConfigError("no link-state rule for pair (" + pair.first() + ", " + pair.second() +
                          ")");
    return resolve_link_state(it->second, aerial_altitude);
}

double rate_bps_hz(double snr, double time_fraction)
{
    if (!(snr >= 0.0))
        throw DomainError("rate_bps_hz: snr must be non-negative");
    if (!(time_fraction >= 0.0 && time_fraction <= 1.0))
        throw DomainError("rate_bps_hz: time fraction must lie in [0, 1]");
    return time_fraction * std::log2(1.0 + snr);
}

} // namespace airground
