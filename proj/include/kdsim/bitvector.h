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

#ifndef KDSIM_BITVECTOR_H
#define KDSIM_BITVECTOR_H

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace kdsim {

/// Element of Z2^n stored as a bitmask.
///
/// Qubit 0 is the leftmost character of the string form and the most
/// significant bit of the mask, so `index()` is directly the computational
/// basis index with qubit 0 as the leftmost tensor factor.
class BitVector {
   public:
    static constexpr int kMaxBits = 64;

    BitVector() = default;
    explicit BitVector(int n);
    static BitVector from_index(uint64_t index, int n);
    /// Parses a string of '0'/'1' characters, leftmost = qubit 0.
    static BitVector parse(std::string_view text);
    static BitVector unit(int j, int n);

    int size() const { return n_; }
    uint64_t index() const { return mask_; }
    bool get(int j) const;
    void set(int j, bool value);
    void flip(int j);
    bool is_zero() const { return mask_ == 0; }
    int weight() const;

    /// Mod-2 inner product.
    int dot(const BitVector &other) const;

    BitVector &operator+=(const BitVector &other);
    friend BitVector operator+(BitVector a, const BitVector &b) {
        a += b;
        return a;
    }

    std::string str() const;

    bool operator==(const BitVector &other) const = default;
    auto operator<=>(const BitVector &other) const = default;

   private:
    BitVector(uint64_t mask, int n) : n_(n), mask_(mask) {}
    uint64_t bit(int j) const { return uint64_t{1} << (n_ - 1 - j); }

    int n_ = 0;
    uint64_t mask_ = 0;
};

/// Index pair (g, chi) of the KD table.
struct PhasePoint {
    BitVector g;
    BitVector chi;
    bool operator==(const PhasePoint &other) const = default;
};

/// Label (u, v) of the real Pauli string prod_j Z_j^{v_j} X_j^{u_j}.
struct PauliLabel {
    BitVector u;
    BitVector v;
    PauliLabel() = default;
    PauliLabel(BitVector u_, BitVector v_);
    int size() const { return u.size(); }
    bool operator==(const PauliLabel &other) const = default;
};

BitVector group_add(const BitVector &a, const BitVector &b);

/// chi(g) = (-1)^{chi . g}.
int character_eval(const BitVector &chi, const BitVector &g);

/// <g|chi> = (-1)^{g . chi} / 2^{n/2}, real for Z2^n.
double dual_overlap(const BitVector &g, const BitVector &chi);

PauliLabel label_add(const PauliLabel &a, const PauliLabel &b);

/// Sign s in P_a P_b = s P_{a+b} for the Z-before-X ordering, (-1)^{u_a . v_b}.
int pauli_product_sign(const PauliLabel &a, const PauliLabel &b);

/// Linear index maps of CX_{ct}: CX|g>_z = |A g>_z and CX|chi>_x = |B chi>_x.
class CnotMaps {
   public:
    CnotMaps(int control, int target, int n);
    int control() const { return control_; }
    int target() const { return target_; }
    /// A_ct: adds bit c into bit t.
    BitVector map_group(BitVector g) const;
    /// B_ct: adds bit t into bit c.
    BitVector map_character(BitVector chi) const;

   private:
    int control_;
    int target_;
    int n_;
};

}  // namespace kdsim

#endif
