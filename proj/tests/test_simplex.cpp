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

#include "airground/simplex.hpp"

#include <gtest/gtest.h>

namespace airground::lp {
namespace {

TEST(Simplex, TextbookMaximum)
{
    // max 3x + 5y  s.t.  x <= 4, 2y <= 12, 3x + 2y <= 18  ->  (2, 6), 36
    Problem p(3, 2);
    p.c = {3.0, 5.0};
    p.at(0, 0) = 1.0;
    p.at(1, 1) = 2.0;
    p.at(2, 0) = 3.0;
    p.at(2, 1) = 2.0;
    p.b = {4.0, 12.0, 18.0};
    const Solution s = solve(p);
    ASSERT_EQ(s.status, Status::Optimal);
    EXPECT_NEAR(s.objective, 36.0, 1e-12);
    EXPECT_NEAR(s.x[0], 2.0, 1e-12);
    EXPECT_NEAR(s.x[1], 6.0, 1e-12);
    // Duals (0, 1.5, 1) certify optimality: b'y = 18 + 18 = 36.
    EXPECT_NEAR(s.duals[0], 0.0, 1e-12);
    EXPECT_NEAR(s.duals[1], 1.5, 1e-12);
    EXPECT_NEAR(s.duals[2], 1.0, 1e-12);
}

TEST(Simplex, DetectsUnbounded)
{
    Problem p(1, 2);
    p.c = {1.0, 1.0};
    p.at(0, 0) = 1.0;
    p.at(0, 1) = -1.0;
    p.b = {1.0};
    EXPECT_EQ(solve(p).status, Status::Unbounded);
}

TEST(Simplex, DegenerateProblemTerminates)
{
    // Classic cycling example for Dantzig's rule without anti-cycling.
    Problem p(3, 4);
    p.c = {0.75, -150.0, 0.02, -6.0};
    const double rows[3][4] = {{0.25, -60.0, -0.04, 9.0}, {0.5, -90.0, -0.02, 3.0}, {0.0, 0.0, 1.0, 0.0}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            p.at(i, j) = rows[i][j];
    p.b = {0.0, 0.0, 1.0};
    const Solution s = solve(p);
    ASSERT_EQ(s.status, Status::Optimal);
    EXPECT_NEAR(s.objective, 0.05, 1e-12);
}

TEST(Simplex, StrongDualityOnRandomFeasibleProblems)
{
    unsigned state = 12345u;
    auto next = [&] {
        state = state * 1664525u + 1013904223u;
        return static_cast<double>(state >> 8) / static_cast<double>(1u << 24);
    };
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t m = 2 + trial % 5;
        const std::size_t n = 2 + (trial / 5) % 6;
        Problem p(m, n);
        for (auto &v : p.a)
            v = 0.1 + next();
        for (auto &v : p.b)
            v = next() * 10.0;
        for (auto &v : p.c)
            v = next() * 3.0 - 0.5;
        const Solution s = solve(p);
        ASSERT_EQ(s.status, Status::Optimal);
        double dual_obj = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            EXPECT_GE(s.duals[i], -1e-12);
            dual_obj += s.duals[i] * p.b[i];
        }
        EXPECT_NEAR(dual_obj, s.objective, 1e-9 * std::max(1.0, s.objective));
        for (std::size_t i = 0; i < m; ++i) {
            double lhs = 0.0;
            for (std::size_t j = 0; j < n; ++j)
                lhs += p.at(i, j) * s.x[j];
            EXPECT_LE(lhs, p.b[i] + 1e-9);
        }
        for (std::size_t j = 0; j < n; ++j) {
            double reduced = -p.c[j];
            for (std::size_t i = 0; i < m; ++i)
                reduced += p.at(i, j) * s.duals[i];
            EXPECT_GE(reduced, -1e-9);
        }
    }
}

} // namespace
} // namespace airground::lp
