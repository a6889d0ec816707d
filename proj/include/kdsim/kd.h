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

#ifndef KDSIM_KD_H
#define KDSIM_KD_H

#include "kdsim/bitvector.h"
#include "kdsim/linalg.h"
#include "kdsim/states.h"

namespace kdsim {

/// Z2^n Kirkwood-Dirac table, entry (g, chi) = <chi|g><g|rho|chi>.
struct KDDistribution {
    int n = 0;
    ComplexMatrix table;

    Complex at(const BitVector &g, const BitVector &chi) const { return table(g.index(), chi.index()); }
};

/// Normalized dual symbol of a measurement effect; all-ones for the identity.
struct KDSymbol {
    int n = 0;
    ComplexMatrix table;
};

/// Location and size of the worst positivity violation of a KD table.
struct KDViolation {
    PhasePoint where;
    Complex value;
    /// max(-Re, |Im|) at `where`; <= 0 means no violation anywhere.
    double amount = 0;
};

/// KD table of an arbitrary operator via a Walsh-Hadamard transform of each
/// row, O(d^2 log d). No state validation.
KDDistribution kd_distribution(const ComplexMatrix &op);
/// Validates rho as a density matrix, then tabulates it.
KDDistribution kd_distribution(const DensityMatrix &rho, double tol = kDefaultTol);
/// O(d^3) reference evaluation of Tr(B_{g,chi} op).
KDDistribution kd_distribution_direct(const ComplexMatrix &op);

/// B_{g,chi} = |chi>_x <chi|g> <g|_z.
ComplexMatrix phase_point_operator_B(const BitVector &g, const BitVector &chi);
/// A_{u,v} = P_{u,v} A_{0,0} P_{u,v}^dag with A_{0,0} the even-overlap Pauli average.
RealMatrix phase_point_operator_A(const BitVector &u, const BitVector &v);

/// DGBR table W_{u,v} = Tr(A_{u,v} rho), evaluated from the A operators.
RealMatrix dgbr_distribution(const DensityMatrix &rho);

/// Tr(B_{g,chi}^dag M) / |<g|chi>|^2; throws if M is not an effect (0 <= M <= I).
KDSymbol kd_symbol(const ComplexMatrix &effect, double tol = kDefaultTol);

/// sum_{g,chi} symbol(M) Q(rho) = Tr(M rho). Throws std::logic_error if
/// the sum keeps an imaginary residue above 1e-10.
double overlap_probability(const ComplexMatrix &effect, const DensityMatrix &rho, double tol = kDefaultTol);

KDViolation worst_violation(const KDDistribution &q);
bool is_kd_positive(const KDDistribution &q, double tol = kDefaultTol);
bool is_kd_positive(const DensityMatrix &rho, double tol = kDefaultTol);

/// Table after a computational-basis measurement of qubit j:
/// Q'_{g,chi} = (Q_{g,chi} + Q_{g,chi+e_j}) / 2.
KDDistribution measurement_update(const KDDistribution &q, int j);

/// KD mana in bits: log2 sum |Q_{g,chi}|.
double kd_mana(const KDDistribution &q);
double kd_mana(const DensityMatrix &rho);

/// Copies of rho needed to distil sigma: mana(sigma) / mana(rho). Throws
/// std::domain_error when rho has zero mana.
double distillation_lower_bound(const DensityMatrix &rho, const DensityMatrix &sigma);

}  // namespace kdsim

#endif
