// Copyright 2026 The nashld Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact two-phase primal simplex over rationals. Bland's rule for both the
// entering and the leaving variable, so it terminates on degenerate systems.

#pragma once

#include <optional>
#include <vector>

#include "nashld/linear_system.hpp"
#include "nashld/rational.hpp"

namespace nashld {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;           // valid when optimal
  std::vector<Rational> x;  // an optimal point when optimal
};

// max c.x subject to sys. Variables are free.
LpResult maximize(const LinearSystem& sys, const std::vector<Rational>& c);

// Some feasible point, or nullopt.
std::optional<std::vector<Rational>> feasible_point(const LinearSystem& sys);

inline bool is_feasible(const LinearSystem& sys) { return feasible_point(sys).has_value(); }

}  // namespace nashld
