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

#include "kdsim/bitvector.h"

#include <cmath>

#include "gtest/gtest.h"
#include "kdsim/pauli.h"
#include "test_util.h"

using namespace kdsim;

TEST(bitvector, parse_and_str) {
    BitVector v = BitVector::parse("0110");
    ASSERT_EQ(v.size(), 4);
    ASSERT_EQ(v.str(), "0110");
    ASSERT_FALSE(v.get(0));
    ASSERT_TRUE(v.get(1));
    // Qubit 0 is the most significant bit.
    ASSERT_EQ(BitVector::parse("100").index(), 4u);
    ASSERT_EQ(BitVector::from_index(1, 3).str(), "001");
    ASSERT_EQ(BitVector::unit(0, 2).str(), "10");
    ASSERT_THROW(BitVector::parse("01a"), std::invalid_argument);
}

TEST(bitvector, max_width) {
    BitVector v(64);
    v.set(0, true);
    v.set(63, true);
    ASSERT_EQ(v.weight(), 2);
    ASSERT_EQ(v.str().size(), 64u);
    ASSERT_THROW(BitVector(65), std::invalid_argument);
}

TEST(bitvector, group_add) {
    ASSERT_EQ(group_add(BitVector::parse("01"), BitVector::parse("11")), BitVector::parse("10"));
    for (uint64_t k = 0; k < 8; k++) {
        BitVector v = BitVector::from_index(k, 3);
        ASSERT_TRUE(group_add(v, v).is_zero());
        ASSERT_EQ(group_add(v, BitVector(3)), v);
    }
    ASSERT_THROW(group_add(BitVector(2), BitVector(3)), std::invalid_argument);
}

TEST(bitvector, character_eval) {
    ASSERT_EQ(character_eval(BitVector::parse("10"), BitVector::parse("11")), -1);
    ASSERT_EQ(character_eval(BitVector::parse("11"), BitVector::parse("11")), +1);
    for (uint64_t g = 0; g < 4; g++) {
        ASSERT_EQ(character_eval(BitVector(2), BitVector::from_index(g, 2)), 1);
    }
}

TEST(bitvector, character_homomorphism_and_sum) {
    int n = 3;
    for (uint64_t c = 0; c < 8; c++) {
        BitVector chi = BitVector::from_index(c, n);
        int total = 0;
        for (uint64_t a = 0; a < 8; a++) {
            BitVector g = BitVector::from_index(a, n);
            total += character_eval(chi, g);
            for (uint64_t b = 0; b < 8; b++) {
                BitVector h = BitVector::from_index(b, n);
                ASSERT_EQ(character_eval(chi, g + h), character_eval(chi, g) * character_eval(chi, h));
            }
        }
        ASSERT_EQ(total, c == 0 ? 8 : 0);
    }
}

TEST(bitvector, dual_overlap) {
    ASSERT_NEAR(dual_overlap(BitVector(1), BitVector(1)), 1 / std::sqrt(2.0), 1e-15);
    ASSERT_NEAR(dual_overlap(BitVector::parse("11"), BitVector::parse("10")), -0.5, 1e-15);
    for (uint64_t g = 0; g < 8; g++) {
        for (uint64_t c = 0; c < 8; c++) {
            double x = dual_overlap(BitVector::from_index(g, 3), BitVector::from_index(c, 3));
            ASSERT_NEAR(std::abs(x), std::pow(2.0, -1.5), 1e-15);
        }
    }
}

TEST(pauli, matrix_examples) {
    ComplexMatrix id = pauli_matrix({BitVector(1), BitVector(1)});
    ASSERT_LT(kdsim_test::max_diff(id, ComplexMatrix::Identity(2, 2)), 1e-15);

    ComplexMatrix zx = pauli_matrix({BitVector::parse("1"), BitVector::parse("1")});
    ComplexMatrix expected(2, 2);
    expected << 0, 1, -1, 0;
    ASSERT_LT(kdsim_test::max_diff(zx, expected), 1e-15);

    ComplexMatrix xi = pauli_matrix({BitVector::parse("10"), BitVector::parse("00")});
    ASSERT_LT(kdsim_test::max_diff(xi, kron(kdsim_test::pauli2('X'), kdsim_test::pauli2('I'))), 1e-15);

    ComplexMatrix iz = pauli_matrix({BitVector::parse("00"), BitVector::parse("01")});
    ASSERT_LT(kdsim_test::max_diff(iz, kron(kdsim_test::pauli2('I'), kdsim_test::pauli2('Z'))), 1e-15);
}

TEST(pauli, labels_are_real) {
    for (uint64_t u = 0; u < 4; u++) {
        for (uint64_t v = 0; v < 4; v++) {
            ComplexMatrix p = pauli_matrix({BitVector::from_index(u, 2), BitVector::from_index(v, 2)});
            ASSERT_EQ(p.imag().cwiseAbs().maxCoeff(), 0.0);
        }
    }
}

TEST(pauli, product_sign_exhaustive) {
    int n = 2;
    for (uint64_t k = 0; k < 256; k++) {
        PauliLabel a(BitVector::from_index(k & 3, n), BitVector::from_index((k >> 2) & 3, n));
        PauliLabel b(BitVector::from_index((k >> 4) & 3, n), BitVector::from_index((k >> 6) & 3, n));
        ComplexMatrix lhs = pauli_matrix(a) * pauli_matrix(b);
        ComplexMatrix sum = pauli_matrix(label_add(a, b));
        int s = pauli_product_sign(a, b);
        ASSERT_LT(kdsim_test::max_diff(lhs, s * sum), 1e-15);
        ASSERT_EQ(s, a.u.dot(b.v) ? -1 : 1);
    }
}

TEST(pauli, string_matrix_and_basis_letters) {
    ASSERT_LT(kdsim_test::max_diff(pauli_string_matrix("XY"),
                                   kron(kdsim_test::pauli2('X'), kdsim_test::pauli2('Y'))),
              1e-15);
    ASSERT_EQ(pauli_basis_letters(0, 2), "II");
    ASSERT_EQ(pauli_basis_letters(1, 2), "IX");
    ASSERT_EQ(pauli_basis_letters(4, 2), "XI");
    ASSERT_EQ(pauli_basis_letters(15, 2), "ZZ");
    ASSERT_THROW(pauli_string_matrix("XQ"), std::invalid_argument);
}

TEST(cnot_maps, examples) {
    CnotMaps maps(0, 1, 2);
    ASSERT_EQ(maps.map_group(BitVector::parse("10")), BitVector::parse("11"));
    ASSERT_EQ(maps.map_group(BitVector::parse("01")), BitVector::parse("01"));
    ASSERT_EQ(maps.map_character(BitVector::parse("01")), BitVector::parse("11"));
    ASSERT_EQ(maps.map_character(BitVector::parse("10")), BitVector::parse("10"));
    ASSERT_THROW(CnotMaps(1, 1, 2), std::invalid_argument);
    ASSERT_THROW(CnotMaps(0, 2, 2), std::out_of_range);
}

TEST(cnot_maps, involution) {
    for (int c = 0; c < 3; c++) {
        for (int t = 0; t < 3; t++) {
            if (c == t) {
                continue;
            }
            CnotMaps maps(c, t, 3);
            for (uint64_t k = 0; k < 8; k++) {
                BitVector v = BitVector::from_index(k, 3);
                ASSERT_EQ(maps.map_group(maps.map_group(v)), v);
                ASSERT_EQ(maps.map_character(maps.map_character(v)), v);
                // The maps are mutually adjoint-inverse: chi . (A g) = (B chi) . g.
                for (uint64_t j = 0; j < 8; j++) {
                    BitVector w = BitVector::from_index(j, 3);
                    ASSERT_EQ(w.dot(maps.map_group(v)), maps.map_character(w).dot(v));
                }
            }
        }
    }
}
