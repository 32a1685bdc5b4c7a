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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

namespace airground {
namespace {

RadioParams unit_radio()
{
    RadioParams r;
    r.ref_path_gain_db = -30.0; // g0 = 1e-3
    return r;
}

// Relative agreement to twelve significant digits.
void expect_12_digits(double got, double want)
{
    EXPECT_LE(std::abs(got - want), 5e-12 * std::abs(want)) << got << " vs " << want;
}

TEST(PathGain, ReferenceDistanceIdentity)
{
    expect_12_digits(path_gain(1.0, {2.6}, unit_radio()), 1e-3);
}

TEST(PathGain, DecadeScaling)
{
    expect_12_digits(path_gain(10.0, {2.0}, unit_radio()), 1e-5);
}

TEST(PathGain, HundredMetersExponent22)
{
    // mpmath, 40 digits: 1e-3 * 100^-2.2
    expect_12_digits(path_gain(100.0, {2.2}, unit_radio()),
                     3.981071705534972507702523050877520434877e-08);
}

TEST(PathGain, ClampsBelowReferenceDistance)
{
    const auto radio = unit_radio();
    EXPECT_DOUBLE_EQ(path_gain(0.0, {2.6}, radio), radio.ref_gain_linear());
    EXPECT_DOUBLE_EQ(path_gain(0.4, {3.5}, radio), radio.ref_gain_linear());
}

TEST(PathGain, RejectsBadInput)
{
    const auto radio = unit_radio();
    EXPECT_THROW(path_gain(-1.0, {2.0}, radio), DomainError);
    EXPECT_THROW(path_gain(std::numeric_limits<double>::quiet_NaN(), {2.0}, radio), DomainError);
    EXPECT_THROW(path_gain(std::numeric_limits<double>::infinity(), {2.0}, radio), DomainError);
    EXPECT_THROW(path_gain(5.0, {0.5}, radio), DomainError);
}

TEST(PathGainProperty, MonotoneInDistance)
{
    std::mt19937_64 rng(20260101);
    std::uniform_real_distribution<double> dist(1.0, 2000.0);
    std::uniform_real_distribution<double> expo(1.0, 6.0);
    const auto radio = unit_radio();
    int violations = 0;
    for (int i = 0; i < 10000; ++i) {
        double d1 = dist(rng);
        double d2 = dist(rng);
        if (d1 == d2)
            continue;
        if (d1 > d2)
            std::swap(d1, d2);
        const PathLossModel m{expo(rng)};
        if (!(path_gain(d1, m, radio) > path_gain(d2, m, radio)))
            ++violations;
    }
    EXPECT_EQ(violations, 0);
}

TEST(PathGainProperty, SmallerExponentWinsBeyondReference)
{
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> dist(1.001, 2000.0);
    std::uniform_real_distribution<double> expo(1.0, 6.0);
    const auto radio = unit_radio();
    int violations = 0;
    for (int i = 0; i < 10000; ++i) {
        const double d = dist(rng);
        double a1 = expo(rng);
        double a2 = expo(rng);
        if (a1 == a2)
            continue;
        if (a1 > a2)
            std::swap(a1, a2);
        if (!(path_gain(d, {a1}, radio) > path_gain(d, {a2}, radio)))
            ++violations;
    }
    EXPECT_EQ(violations, 0);
    EXPECT_GT(path_gain(80.0, {2.2}, radio), path_gain(80.0, {3.5}, radio));
}

TEST(LinkState, ThresholdExamples)
{
    const LinkStateRule at50{{"UIRS", "U2"}, 50.0, LinkState::NLoS};
    EXPECT_EQ(resolve_link_state(at50, 50.0), LinkState::LoS);
    EXPECT_EQ(resolve_link_state(at50, 30.0), LinkState::NLoS);
    const LinkStateRule zero{{"A", "B"}, 0.0, LinkState::Blocked};
    EXPECT_EQ(resolve_link_state(zero, 0.0), LinkState::LoS);
}

TEST(LinkState, SingleStepAtThreshold)
{
    const LinkStateRule rule{{"A", "B"}, 37.5, LinkState::Blocked};
    int transitions = 0;
    LinkState prev = resolve_link_state(rule, 0.0);
    for (int i = 1; i <= 1000; ++i) {
        const double h = 0.1 * i;
        const LinkState s = resolve_link_state(rule, h);
        if (s != prev) {
            ++transitions;
            EXPECT_DOUBLE_EQ(h, 37.5);
        }
        EXPECT_EQ(s, h >= 37.5 ? LinkState::LoS : LinkState::Blocked);
        prev = s;
    }
    EXPECT_EQ(transitions, 1);
}

TEST(LinkState, RuleSetLookupIsUnordered)
{
    LinkStateRuleSet rules;
    const LinkStateRule r{{"U1", "UIRS"}, 30.0, LinkState::NLoS};
    rules.emplace(r.endpoints, r);
    EXPECT_EQ(resolve_link_state(NodePair("UIRS", "U1"), 31.0, rules), LinkState::LoS);
    EXPECT_EQ(resolve_link_state(NodePair("U1", "UIRS"), 29.0, rules), LinkState::NLoS);
    EXPECT_THROW(resolve_link_state(NodePair("U1", "TIRS"), 29.0, rules), ConfigError);
}

TEST(Rate, Examples)
{
    EXPECT_DOUBLE_EQ(rate_bps_hz(0.0), 0.0);
    EXPECT_DOUBLE_EQ(rate_bps_hz(1.0), 1.0);
    EXPECT_DOUBLE_EQ(rate_bps_hz(3.0, 0.5), 1.0);
    EXPECT_THROW(rate_bps_hz(-1.0), DomainError);
}

TEST(Radio, Validation)
{
    RadioParams r;
    EXPECT_NO_THROW(r.validate());
    r.ref_path_gain_db = 3.0;
    EXPECT_THROW(r.validate(), ConfigError);
    r = RadioParams{};
    r.noise_power_w = 0.0;
    EXPECT_THROW(r.validate(), ConfigError);
}

} // namespace
} // namespace airground
