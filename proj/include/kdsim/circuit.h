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

#ifndef KDSIM_CIRCUIT_H
#define KDSIM_CIRCUIT_H

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kdsim/bitvector.h"

namespace kdsim {

enum class GateKind { Pauli, HadamardAll, Cnot, Measure, ConditionalPauli };

struct Gate {
    GateKind kind = GateKind::Pauli;
    /// Pauli label for Pauli and ConditionalPauli.
    PauliLabel pauli;
    int control = -1;
    int target = -1;
    /// Measured qubit for Measure.
    int qubit = -1;
    /// ConditionalPauli fires when the parity of these earlier outcomes is 1.
    std::vector<int> condition;

    static Gate make_pauli(PauliLabel label);
    static Gate make_hadamard_all();
    static Gate make_cnot(int control, int target);
    static Gate make_measure(int qubit);
    static Gate make_conditional_pauli(PauliLabel label, std::vector<int> condition);
};

struct Circuit {
    int n = 0;
    std::vector<Gate> gates;

    int num_measurements() const;
    /// Throws std::invalid_argument if an index is out of range or a
    /// condition refers to an outcome not yet produced.
    void validate() const;
    std::string str() const;
};

class CircuitParseError : public std::invalid_argument {
   public:
    CircuitParseError(int line, int column, const std::string &message);
    int line() const { return line_; }
    int column() const { return column_; }

   private:
    int line_;
    int column_;
};

/// Line format, '#' starts a comment:
///   n <int>
///   P <ubits> <vbits>
///   HALL
///   CX <c> <t>
///   M <j>
///   P? <ubits> <vbits> if <i1>^<i2>^...
Circuit parse_circuit(std::string_view text);

}  // namespace kdsim

#endif
