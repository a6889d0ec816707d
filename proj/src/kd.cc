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

#include "kdsim/kd.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "kdsim/pauli.h"

namespace kdsim {

namespace {

/// In-place unnormalized Walsh-Hadamard transform: out[c] = sum_h (-1)^{h.c} in[h].
void walsh_hadamard(Complex *data, Eigen::Index d) {
    for (Eigen::Index half = 1; half < d; half <<= 1) {
        for (Eigen::Index block = 0; block < d; block += 2 * half) {
            for (Eigen::Index k = block; k < block + half; k++) {
                Complex a = data[k];
                Complex b = data[k + half];
                data[k] = a + b;
                data[k + half] = a - b;
            }
        }
    }
}

inline double parity_sign(uint64_t a, uint64_t b) {
    return (__builtin_popcountll(a & b) & 1) ? -1.0 : 1.0;
}

}  // namespace

KDDistribution kd_distribution(const ComplexMatrix &op) {
    int n = qubits_for_dimension(op.rows());
    if (op.rows() != op.cols()) {
        throw std::invalid_argument("kd_distribution: operator must be square");
    }
    Eigen::Index d = op.rows();
    // Row-major scratch so each row is contiguous for the transform.
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> rows = op;
    double inv_d = 1.0 / static_cast<double>(d);
    KDDistribution q{n, ComplexMatrix(d, d)};
    for (Eigen::Index g = 0; g < d; g++) {
        walsh_hadamard(rows.row(g).data(), d);
        for (Eigen::Index chi = 0; chi < d; chi++) {
            q.table(g, chi) = inv_d * parity_sign(g, chi) * rows(g, chi);
        }
    }
    return q;
}

KDDistribution kd_distribution(const DensityMatrix &rho, double tol) {
    validate_density_matrix(rho, tol);
    return kd_distribution(rho.mat);
}

KDDistribution kd_distribution_direct(const ComplexMatrix &op) {
    int n = qubits_for_dimension(op.rows());
    Eigen::Index d = op.rows();
    KDDistribution q{n, ComplexMatrix(d, d)};
    for (Eigen::Index g = 0; g < d; g++) {
        for (Eigen::Index chi = 0; chi < d; chi++) {
            ComplexMatrix b = phase_point_operator_B(BitVector::from_index(g, n), BitVector::from_index(chi, n));
            q.table(g, chi) = (b * op).trace();
        }
    }
    return q;
}

ComplexMatrix phase_point_operator_B(const BitVector &g, const BitVector &chi) {
    PureState x = character_state(chi);
    PureState z = computational_state(g);
    return dual_overlap(g, chi) * x.amp * z.amp.adjoint();
}

namespace {

ComplexMatrix origin_point_operator(int n) {
    check_dense_qubits(n);
    Eigen::Index d = Eigen::Index{1} << n;
    ComplexMatrix a = ComplexMatrix::Zero(d, d);
    for (uint64_t u = 0; u < static_cast<uint64_t>(d); u++) {
        for (uint64_t v = 0; v < static_cast<uint64_t>(d); v++) {
            if (__builtin_popcountll(u & v) % 2 == 0) {
                a += pauli_matrix(PauliLabel(BitVector::from_index(u, n), BitVector::from_index(v, n)));
            }
        }
    }
    return a / static_cast<double>(d * d);
}

}  // namespace

RealMatrix phase_point_operator_A(const BitVector &u, const BitVector &v) {
    ComplexMatrix p = pauli_matrix(PauliLabel(u, v));
    return (p * origin_point_operator(u.size()) * p.adjoint()).real();
}

RealMatrix dgbr_distribution(const DensityMatrix &rho) {
    int n = rho.n;
    Eigen::Index d = rho.dim();
    ComplexMatrix origin = origin_point_operator(n);
    RealMatrix w(d, d);
    for (Eigen::Index u = 0; u < d; u++) {
        for (Eigen::Index v = 0; v < d; v++) {
            ComplexMatrix p = pauli_matrix(PauliLabel(BitVector::from_index(u, n), BitVector::from_index(v, n)));
            w(u, v) = (p * origin * p.adjoint() * rho.mat).trace().real();
        }
    }
    return w;
}

KDSymbol kd_symbol(const ComplexMatrix &effect, double tol) {
    int n = qubits_for_dimension(effect.rows());
    Eigen::Index d = effect.rows();
    if (!is_hermitian(effect, tol)) {
        throw std::invalid_argument("kd_symbol: effect is not Hermitian");
    }
    if (min_eigenvalue(effect) < -tol) {
        throw std::invalid_argument("kd_symbol: effect is not positive semidefinite");
    }
    if (min_eigenvalue(ComplexMatrix::Identity(d, d) - effect) < -tol) {
        throw std::invalid_argument("kd_symbol: effect exceeds the identity");
    }
    // d <g|chi><chi|M|g> = (-1)^{g.chi} sum_h (-1)^{h.chi} M_{h,g}: a transform of each column.
    ComplexMatrix cols = effect;
    KDSymbol symbol{n, ComplexMatrix(d, d)};
    for (Eigen::Index g = 0; g < d; g++) {
        walsh_hadamard(cols.col(g).data(), d);
        for (Eigen::Index chi = 0; chi < d; chi++) {
            symbol.table(g, chi) = parity_sign(g, chi) * cols(chi, g);
        }
    }
    return symbol;
}

double overlap_probability(const ComplexMatrix &effect, const DensityMatrix &rho, double tol) {
    KDSymbol symbol = kd_symbol(effect, tol);
    KDDistribution q = kd_distribution(rho, tol);
    if (symbol.n != q.n) {
        throw std::invalid_argument("overlap_probability: effect and state sizes differ");
    }
    Complex total = symbol.table.cwiseProduct(q.table).sum();
    if (std::abs(total.imag()) > 1e-10) {
        throw std::logic_error("overlap formula left imaginary residue " + std::to_string(total.imag()));
    }
    return total.real();
}

KDViolation worst_violation(const KDDistribution &q) {
    KDViolation worst;
    worst.amount = -std::numeric_limits<double>::infinity();
    for (Eigen::Index g = 0; g < q.table.rows(); g++) {
        for (Eigen::Index chi = 0; chi < q.table.cols(); chi++) {
            Complex value = q.table(g, chi);
            double amount = std::max(-value.real(), std::abs(value.imag()));
            if (amount > worst.amount) {
                worst = {{BitVector::from_index(g, q.n), BitVector::from_index(chi, q.n)}, value, amount};
            }
        }
    }
    return worst;
}

bool is_kd_positive(const KDDistribution &q, double tol) {
    for (Eigen::Index k = 0; k < q.table.size(); k++) {
        Complex value = q.table.data()[k];
        if (std::abs(value.imag()) > tol || value.real() < -tol) {
            return false;
        }
    }
    return true;
}

bool is_kd_positive(const DensityMatrix &rho, double tol) {
    return is_kd_positive(kd_distribution(rho.mat), tol);
}

KDDistribution measurement_update(const KDDistribution &q, int j) {
    if (j < 0 || j >= q.n) {
        throw std::out_of_range("measurement_update: qubit " + std::to_string(j) + " out of range");
    }
    Eigen::Index flip = Eigen::Index{1} << (q.n - 1 - j);
    KDDistribution out{q.n, ComplexMatrix(q.table.rows(), q.table.cols())};
    for (Eigen::Index chi = 0; chi < q.table.cols(); chi++) {
        out.table.col(chi) = 0.5 * (q.table.col(chi) + q.table.col(chi ^ flip));
    }
    return out;
}

double kd_mana(const KDDistribution &q) {
    double total = q.table.cwiseAbs().sum();
    return std::max(0.0, std::log2(total));
}

double kd_mana(const DensityMatrix &rho) {
    return kd_mana(kd_distribution(rho.mat));
}

double distillation_lower_bound(const DensityMatrix &rho, const DensityMatrix &sigma) {
    double input = kd_mana(rho);
    if (input <= 1e-12) {
        throw std::domain_error("input state has zero KD mana; no finite distillation bound");
    }
    return kd_mana(sigma) / input;
}

}  // namespace kdsim
