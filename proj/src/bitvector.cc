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

#include <bit>
#include <cmath>
#include <stdexcept>

namespace kdsim {

namespace {

void check_size(int n) {
    if (n < 0 || n > BitVector::kMaxBits) {
        throw std::invalid_argument("BitVector length " + std::to_string(n) + " outside [0, 64]");
    }
}

void check_same_size(const BitVector &a, const BitVector &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument(
            "BitVector length mismatch: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
    }
}

uint64_t low_mask(int n) {
    return n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
}

}  // namespace

BitVector::BitVector(int n) : n_(n), mask_(0) {
    check_size(n);
}

BitVector BitVector::from_index(uint64_t index, int n) {
    check_size(n);
    if ((index & ~low_mask(n)) != 0) {
        throw std::invalid_argument("index " + std::to_string(index) + " does not fit in " + std::to_string(n) + " bits");
    }
    return BitVector(index, n);
}

BitVector BitVector::parse(std::string_view text) {
    int n = static_cast<int>(text.size());
    check_size(n);
    BitVector result(n);
    for (int j = 0; j < n; j++) {
        char c = text[j];
        if (c == '1') {
            result.set(j, true);
        } else if (c != '0') {
            throw std::invalid_argument("bad bit character '" + std::string(1, c) + "' in \"" + std::string(text) + "\"");
        }
    }
    return result;
}

BitVector BitVector::unit(int j, int n) {
    BitVector result(n);
    result.set(j, true);
    return result;
}

bool BitVector::get(int j) const {
    if (j < 0 || j >= n_) {
        throw std::out_of_range("qubit index " + std::to_string(j) + " out of range");
    }
    return (mask_ & bit(j)) != 0;
}

void BitVector::set(int j, bool value) {
    if (j < 0 || j >= n_) {
        throw std::out_of_range("qubit index " + std::to_string(j) + " out of range");
    }
    if (value) {
        mask_ |= bit(j);
    } else {
        mask_ &= ~bit(j);
    }
}

void BitVector::flip(int j) {
    set(j, !get(j));
}

int BitVector::weight() const {
    return std::popcount(mask_);
}

int BitVector::dot(const BitVector &other) const {
    check_same_size(*this, other);
    return std::popcount(mask_ & other.mask_) & 1;
}

BitVector &BitVector::operator+=(const BitVector &other) {
    check_same_size(*this, other);
    mask_ ^= other.mask_;
    return *this;
}

std::string BitVector::str() const {
    std::string result(n_, '0');
    for (int j = 0; j < n_; j++) {
        if (get(j)) {
            result[j] = '1';
        }
    }
    return result;
}

PauliLabel::PauliLabel(BitVector u_, BitVector v_) : u(u_), v(v_) {
    check_same_size(u, v);
}

BitVector group_add(const BitVector &a, const BitVector &b) {
    return a + b;
}

int character_eval(const BitVector &chi, const BitVector &g) {
    return chi.dot(g) ? -1 : +1;
}

double dual_overlap(const BitVector &g, const BitVector &chi) {
    double magnitude = std::pow(2.0, -0.5 * g.size());
    return g.dot(chi) ? -magnitude : magnitude;
}

PauliLabel label_add(const PauliLabel &a, const PauliLabel &b) {
    return PauliLabel(a.u + b.u, a.v + b.v);
}

int pauli_product_sign(const PauliLabel &a, const PauliLabel &b) {
    return a.u.dot(b.v) ? -1 : +1;
}

CnotMaps::CnotMaps(int control, int target, int n) : control_(control), target_(target), n_(n) {
    if (control < 0 || control >= n || target < 0 || target >= n) {
        throw std::out_of_range("CX qubit index out of range");
    }
    if (control == target) {
        throw std::invalid_argument("CX control equals target (" + std::to_string(control) + ")");
    }
}

BitVector CnotMaps::map_group(BitVector g) const {
    if (g.get(control_)) {
        g.flip(target_);
    }
    return g;
}

BitVector CnotMaps::map_character(BitVector chi) const {
    if (chi.get(target_)) {
        chi.flip(control_);
    }
    return chi;
}

}  // namespace kdsim
