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

#ifndef KDSIM_STATES_H
#define KDSIM_STATES_H

#include <vector>

#include "kdsim/bitvector.h"
#include "kdsim/linalg.h"
#include "kdsim/rng.h"

namespace kdsim {

struct PureState {
    int n = 0;
    ComplexVector amp;
};

/// Dense density matrix on n qubits. Construction does not validate; use
/// `validate_density_matrix` where a physical state is required.
struct DensityMatrix {
    int n = 0;
    ComplexMatrix mat;

    DensityMatrix() = default;
    DensityMatrix(int n_, ComplexMatrix mat_);
    explicit DensityMatrix(ComplexMatrix mat_);
    Eigen::Index dim() const { return mat.rows(); }
};

/// Throws std::invalid_argument unless rho is Hermitian, unit trace and PSD within tol.
void validate_density_matrix(const DensityMatrix &rho, double tol = kDefaultTol);

DensityMatrix projector(const PureState &psi);
DensityMatrix maximally_mixed(int n);
DensityMatrix tensor(const DensityMatrix &a, const DensityMatrix &b);

/// Subgroup of Z2^n with a reduced generating set and its enumerated members.
class Subgroup {
   public:
    /// Closure of the given generators; throws on length mismatch.
    static Subgroup span(int n, const std::vector<BitVector> &generators);
    /// Validates that `members` is a subgroup and wraps it.
    static Subgroup from_members(int n, const std::vector<BitVector> &members);

    int n() const { return n_; }
    const std::vector<BitVector> &generators() const { return generators_; }
    const std::vector<BitVector> &members() const { return members_; }
    size_t order() const { return members_.size(); }
    bool contains(const BitVector &x) const;
    /// Characters trivial on the subgroup, found by scanning all 2^n characters.
    std::vector<BitVector> perp_members() const;

   private:
    int n_ = 0;
    std::vector<BitVector> generators_;
    std::vector<BitVector> members_;
};

/// Basis of {chi : chi . h = 0 for all generators h}, by GF(2) elimination.
std::vector<BitVector> orthogonal_complement_basis(int n, const std::vector<BitVector> &generators);

PureState computational_state(const BitVector &g);
/// |chi>_x = 2^{-n/2} sum_g chi(g) |g>_z.
PureState character_state(const BitVector &chi);
/// |H; g, chi> = |H|^{-1/2} P_{g,chi} sum_{h in H} |h>_z.
PureState css_state(const Subgroup &h, const BitVector &g, const BitVector &chi);

std::vector<Subgroup> enumerate_subgroups(int n);
/// Distinct CSS states for n <= 3, deduplicated up to global phase.
std::vector<PureState> enumerate_css_states(int n);
/// All pure stabilizer states for n <= 2, or only those with real density matrices.
std::vector<PureState> enumerate_stabilizer_states(int n, bool rebit_only);

/// |<psi|phi>| >= 1 - 1e-9.
bool same_ray(const PureState &a, const PureState &b);

/// rho = A A^T / Tr(A A^T) with A a d x d matrix of standard normals.
DensityMatrix ginibre_rebit_sample(int n, CounterRng &rng);

ComplexMatrix hadamard_all(int n);
ComplexMatrix cnot_matrix(int n, int control, int target);

DensityMatrix apply_unitary(const DensityMatrix &rho, const ComplexMatrix &u, double tol = kDefaultTol);

/// Traces out qubits 0..k-1.
DensityMatrix partial_trace_first(const DensityMatrix &rho, int k);

bool is_real_state(const DensityMatrix &rho, double tol = kDefaultTol);
bool is_psd(const DensityMatrix &rho, double tol = kDefaultTol);

}  // namespace kdsim

#endif
