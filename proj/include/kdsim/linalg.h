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

#ifndef KDSIM_LINALG_H
#define KDSIM_LINALG_H

#include <complex>

#include <Eigen/Dense>

namespace kdsim {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr double kDefaultTol = 1e-10;

/// Dense operators are capped at 10 qubits (d = 1024).
inline constexpr int kMaxDenseQubits = 10;

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// Throws unless 1 <= n <= kMaxDenseQubits.
void check_dense_qubits(int n);

/// log2 of a power-of-two dimension; throws otherwise.
int qubits_for_dimension(Eigen::Index dim);

double max_abs_entry(const ComplexMatrix &m);

bool is_hermitian(const ComplexMatrix &m, double tol = kDefaultTol);

/// Smallest eigenvalue of the Hermitian part of m.
double min_eigenvalue(const ComplexMatrix &m);

}  // namespace kdsim

#endif
