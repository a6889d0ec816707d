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

#include "kdsim/linalg.h"

#include <stdexcept>
#include <string>

namespace kdsim {

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix result(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            result.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return result;
}

void check_dense_qubits(int n) {
    if (n < 1 || n > kMaxDenseQubits) {
        throw std::invalid_argument(
            "dense operators support 1 to " + std::to_string(kMaxDenseQubits) + " qubits, got " + std::to_string(n));
    }
}

int qubits_for_dimension(Eigen::Index dim) {
    int n = 0;
    while ((Eigen::Index{1} << n) < dim) {
        n++;
    }
    if ((Eigen::Index{1} << n) != dim || n == 0) {
        throw std::invalid_argument("matrix dimension " + std::to_string(dim) + " is not 2^n with n >= 1");
    }
    return n;
}

double max_abs_entry(const ComplexMatrix &m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix &m, double tol) {
    return m.rows() == m.cols() && max_abs_entry(m - m.adjoint()) <= tol;
}

double min_eigenvalue(const ComplexMatrix &m) {
    ComplexMatrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

}  // namespace kdsim
