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

#include "kdsim/pauli.h"

#include <stdexcept>

namespace kdsim {

ComplexMatrix pauli_matrix(const PauliLabel &label) {
    int n = label.size();
    check_dense_qubits(n);
    Eigen::Index d = Eigen::Index{1} << n;
    ComplexMatrix p = ComplexMatrix::Zero(d, d);
    // X^u |h> = |h+u>, then Z^v contributes (-1)^{v.(h+u)}.
    for (uint64_t h = 0; h < static_cast<uint64_t>(d); h++) {
        BitVector out = BitVector::from_index(h, n) + label.u;
        p(out.index(), h) = label.v.dot(out) ? -1.0 : 1.0;
    }
    return p;
}

ComplexMatrix pauli_string_matrix(const std::string &letters) {
    if (letters.empty()) {
        throw std::invalid_argument("empty Pauli string");
    }
    const Complex i{0, 1};
    ComplexMatrix result = ComplexMatrix::Identity(1, 1);
    for (char c : letters) {
        ComplexMatrix single(2, 2);
        switch (c) {
            case 'I':
                single << 1, 0, 0, 1;
                break;
            case 'X':
                single << 0, 1, 1, 0;
                break;
            case 'Y':
                single << 0, -i, i, 0;
                break;
            case 'Z':
                single << 1, 0, 0, -1;
                break;
            default:
                throw std::invalid_argument("bad Pauli letter '" + std::string(1, c) + "'");
        }
        result = kron(result, single);
    }
    return result;
}

std::string pauli_basis_letters(int k, int n) {
    static constexpr char kLetters[] = "IXYZ";
    std::string result(n, 'I');
    for (int j = n - 1; j >= 0; j--) {
        result[j] = kLetters[k % 4];
        k /= 4;
    }
    return result;
}

}  // namespace kdsim
