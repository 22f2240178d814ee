/*
 * Copyright 2026 The multiunit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <variant>
#include <vector>

#include "multiunit/rational.hpp"

namespace multiunit::lp {

using Vector = std::vector<Rat>;
using Matrix = std::vector<Vector>;  ///< row-major

/// Outcome of a phase-1 solve of { z >= 0 : M z = rhs }.
struct StandardFormResult {
  bool feasible = false;
  Vector solution;  ///< z when feasible
  Vector farkas;    ///< pi with pi^T M <= 0 and pi^T rhs > 0 when infeasible
};

/// Exact phase-1 simplex with Bland's rule. Dimensions must agree.
StandardFormResult solve_standard_form(const Matrix& m, const Vector& rhs);

/// x with G x >= h (x free).
struct FeasiblePoint {
  Vector x;
};
/// y >= 0 with y^T G = 0 and y^T h > 0: a proof that G x >= h has no solution.
struct InfeasibilityProof {
  Vector multipliers;
};

/// Decides { x : G x >= h } by solving its Farkas alternative. Exactly one
/// of the two certificates comes back, and both are checkable without the solver.
std::variant<FeasiblePoint, InfeasibilityProof> solve_inequalities(const Matrix& g, const Vector& h);

bool satisfies(const Matrix& g, const Vector& h, const Vector& x);
bool proves_infeasible(const Matrix& g, const Vector& h, const Vector& y);

}  // namespace multiunit::lp
