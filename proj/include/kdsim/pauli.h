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

#ifndef KDSIM_PAULI_H
#define KDSIM_PAULI_H

#include <string>

#include "kdsim/bitvector.h"
#include "kdsim/linalg.h"

namespace kdsim {

/// P_{u,v} = prod_j Z_j^{v_j} X_j^{u_j}; entries in {0, +1, -1}.
ComplexMatrix pauli_matrix(const PauliLabel &label);

/// Hermitian Pauli string from letters in {I,X,Y,Z}, e.g. "XY".
ComplexMatrix pauli_string_matrix(const std::string &letters);

/// Letters of the Pauli basis element with index `k` in 0..4^n-1, ordered
/// I < X < Y < Z with qubit 0 most significant.
std::string pauli_basis_letters(int k, int n);

}  // namespace kdsim

#endif
