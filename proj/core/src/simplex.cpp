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

#include "airground/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace airground::lp {

namespace {

constexpr double kPivotTol = 1e-11;
constexpr double kReducedCostTol = 1e-12;
constexpr std::size_t kDegenerateRunBeforeBland = 50;

} // namespace

Solution solve(const Problem &problem, std::size_t max_pivots)
{
    const std::size_t m = problem.rows;
    const std::size_t n = problem.cols;
    if (problem.a.size() != m * n || problem.b.size() != m || problem.c.size() != n)
        throw DomainError("lp::solve: inconsistent problem dimensions");
    for (double bi : problem.b)
        if (!(bi >= 0.0))
            throw DomainError("lp::solve: right-hand side must be non-negative");

    // Columns: n structural, m slack, then rhs. Row m is the objective row
    // holding reduced costs (negative => improving).
    const std::size_t width = n + m + 1;
    std::vector<double> t((m + 1) * width, 0.0);
    auto cell = [&](std::size_t i, std::size_t j) -> double & { return t[i * width + j]; };

    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            cell(i, j) = problem.at(i, j);
        cell(i, n + i) = 1.0;
        cell(i, width - 1) = problem.b[i];
    }
    for (std::size_t j = 0; j < n; ++j)
        cell(m, j) = -problem.c[j];

    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i)
        basis[i] = n + i;

    Solution sol;
    std::size_t degenerate_run = 0;

    while (true) {
        const bool bland = degenerate_run >= kDegenerateRunBeforeBland;

        std::size_t enter = width;
        double best = -kReducedCostTol;
        for (std::size_t j = 0; j + 1 < width; ++j) {
            const double rc = cell(m, j);
            if (bland) {
                if (rc < -kReducedCostTol) {
                    enter = j;
                    break;
                }
            } else if (rc < best) {
                best = rc;
                enter = j;
            }
        }
        if (enter == width) {
            sol.status = Status::Optimal;
            break;
        }
        if (sol.pivots >= max_pivots) {
            sol.status = Status::IterationLimit;
            break;
        }

        std::size_t leave = m;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < m; ++i) {
            const double aij = cell(i, enter);
            if (aij <= kPivotTol)
                continue;
            const double ratio = cell(i, width - 1) / aij;
            if (ratio < best_ratio - 1e-15 ||
                (ratio <= best_ratio + 1e-15 && leave < m && basis[i] < basis[leave])) {
                best_ratio = ratio;
                leave = i;
            }
        }
        if (leave == m) {
            sol.status = Status::Unbounded;
            break;
        }

        degenerate_run = best_ratio <= 1e-15 ? degenerate_run + 1 : 0;

        const double pivot = cell(leave, enter);
        for (std::size_t j = 0; j < width; ++j)
            cell(leave, j) /= pivot;
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == leave)
                continue;
            const double factor = cell(i, enter);
            if (factor == 0.0)
                continue;
            for (std::size_t j = 0; j < width; ++j)
                cell(i, j) -= factor * cell(leave, j);
            cell(i, enter) = 0.0;
        }
        basis[leave] = enter;
        ++sol.pivots;
    }

    sol.x.assign(n, 0.0);
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n)
            sol.x[basis[i]] = std::max(0.0, cell(i, width - 1));
    sol.duals.assign(m, 0.0);
    for (std::size_t i = 0; i < m; ++i)
        sol.duals[i] = std::max(0.0, cell(m, n + i));
    sol.objective = 0.0;
    for (std::size_t j = 0; j < n; ++j)
        sol.objective += problem.c[j] * sol.x[j];
    return sol;
}

} // namespace airground::lp
