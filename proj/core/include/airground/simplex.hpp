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
#include <vector>

namespace airground::lp {

/// maximize c'x  subject to  A x <= b,  x >= 0,  with b >= 0 so the slack
/// basis is a feasible start. A is row-major, rows() x cols().
struct Problem {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> a;
    std::vector<double> b;
    std::vector<double> c;

    Problem(std::size_t m, std::size_t n) : rows(m), cols(n), a(m * n, 0.0), b(m, 0.0), c(n, 0.0) {}

    double &at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    double at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

enum class Status { Optimal, Unbounded, IterationLimit };

struct Solution {
    Status status = Status::IterationLimit;
    double objective = 0.0;
    std::vector<double> x;     // primal, size cols
    std::vector<double> duals; // one per row, >= 0
    std::size_t pivots = 0;
};

/// Dense tableau primal simplex. Dantzig pricing with smallest-index tie
/// breaks; switches to Bland's rule after a run of degenerate pivots, so
/// the result is deterministic and cycling cannot occur.
Solution solve(const Problem &problem, std::size_t max_pivots = 100000);

} // namespace airground::lp
