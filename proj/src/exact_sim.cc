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

#include "kdsim/exact_sim.h"

#include <stdexcept>

#include "kdsim/pauli.h"

namespace kdsim {

namespace {

struct Branch {
    ComplexMatrix rho;  // unnormalized; trace is the branch probability
    std::vector<uint8_t> bits;
};

void conjugate(ComplexMatrix &rho, const ComplexMatrix &u) {
    rho = u * rho * u.adjoint();
}

}  // namespace

ProbabilityMap exact_simulate(const Circuit &circuit, const DensityMatrix &rho) {
    circuit.validate();
    if (circuit.n > kExactMaxQubits) {
        throw std::invalid_argument("exact_simulate supports at most " + std::to_string(kExactMaxQubits) + " qubits");
    }
    if (circuit.num_measurements() > kExactMaxMeasurements) {
        throw std::invalid_argument("exact_simulate supports at most " + std::to_string(kExactMaxMeasurements) +
                                    " measurements");
    }
    if (rho.n != circuit.n) {
        throw std::invalid_argument("input state has " + std::to_string(rho.n) + " qubits, circuit has " +
                                    std::to_string(circuit.n));
    }
    Eigen::Index d = rho.dim();
    std::vector<Branch> branches{{rho.mat, {}}};
    for (const Gate &gate : circuit.gates) {
        switch (gate.kind) {
            case GateKind::Pauli: {
                ComplexMatrix p = pauli_matrix(gate.pauli);
                for (auto &b : branches) {
                    conjugate(b.rho, p);
                }
                break;
            }
            case GateKind::ConditionalPauli: {
                ComplexMatrix p = pauli_matrix(gate.pauli);
                for (auto &b : branches) {
                    int parity = 0;
                    for (int idx : gate.condition) {
                        parity ^= b.bits[idx];
                    }
                    if (parity) {
                        conjugate(b.rho, p);
                    }
                }
                break;
            }
            case GateKind::HadamardAll: {
                ComplexMatrix h = hadamard_all(circuit.n);
                for (auto &b : branches) {
                    conjugate(b.rho, h);
                }
                break;
            }
            case GateKind::Cnot: {
                ComplexMatrix cx = cnot_matrix(circuit.n, gate.control, gate.target);
                for (auto &b : branches) {
                    conjugate(b.rho, cx);
                }
                break;
            }
            case GateKind::Measure: {
                Eigen::Index bit = Eigen::Index{1} << (circuit.n - 1 - gate.qubit);
                std::vector<Branch> next;
                for (auto &b : branches) {
                    for (uint8_t outcome : {0, 1}) {
                        // (I + (-1)^b Z_j)/2 keeps basis indices whose bit j equals b.
                        Eigen::VectorXd keep(d);
                        for (Eigen::Index k = 0; k < d; k++) {
                            keep(k) = ((k & bit) != 0) == (outcome == 1) ? 1.0 : 0.0;
                        }
                        ComplexMatrix projected = keep.asDiagonal() * b.rho * keep.asDiagonal();
                        if (projected.trace().real() <= 1e-15) {
                            continue;
                        }
                        Branch child{std::move(projected), b.bits};
                        child.bits.push_back(outcome);
                        next.push_back(std::move(child));
                    }
                }
                branches = std::move(next);
                break;
            }
        }
    }
    ProbabilityMap result;
    for (const auto &b : branches) {
        result[ShotRecord{b.bits}.str()] += b.rho.trace().real();
    }
    return result;
}

}  // namespace kdsim
