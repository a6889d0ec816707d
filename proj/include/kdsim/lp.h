// Copyright 2026 The kdsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KDSIM_LP_H
#define KDSIM_LP_H

#include <optional>
#include <stdexcept>
#include <vector>

#include "kdsim/rational.h"

namespace kdsim {

/// Solver breakdown, as opposed to a proven verdict.
class LpSolverError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Outcome of the feasibility problem A p = b, p >= 0.
///
/// Feasible results carry the weights p (A p = b checked exactly). Infeasible
/// results carry a Farkas vector y with y . A_j <= 0 for every column and
/// y . b > 0, also checked exactly.
struct FeasibilityResult {
    bool feasible = false;
    RationalVector weights;
    RationalVector certificate;
};

/// Exact phase-one simplex with Bland's rule. `columns[j]` is column j of A.
FeasibilityResult solve_feasibility_exact(const std::vector<RationalVector> &columns, const RationalVector &rhs);

/// Floating-point phase-one simplex on the same problem.
struct FloatLpResult {
    /// Optimal sum of artificial variables; zero up to rounding when feasible.
    double infeasibility = 0;
    /// Final basis; index j < k is column j, k + i is the artificial of row i.
    std::vector<size_t> basis;
    /// Row sign flips applied so the right-hand side is nonnegative.
    std::vector<int> row_signs;
    bool converged = false;
};

FloatLpResult solve_feasibility_float(const std::vector<std::vector<double>> &columns, const std::vector<double> &rhs);

/// Re-solves the system for a floating basis in exact arithmetic and checks
/// whether it proves feasibility or infeasibility. Returns nullopt when the
/// basis proves neither.
std::optional<FeasibilityResult> certify_basis(const std::vector<RationalVector> &columns, const RationalVector &rhs,
                                               const FloatLpResult &hint);

/// Throws LpSolverError unless `result` is a valid proof for the problem.
void verify_feasibility_result(const std::vector<RationalVector> &columns, const RationalVector &rhs,
                               const FeasibilityResult &result);

}  // namespace kdsim

#endif
