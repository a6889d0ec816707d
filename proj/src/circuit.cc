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

#include "kdsim/circuit.h"

#include <charconv>
#include <sstream>

namespace kdsim {

Gate Gate::make_pauli(PauliLabel label) {
    Gate g;
    g.kind = GateKind::Pauli;
    g.pauli = std::move(label);
    return g;
}

Gate Gate::make_hadamard_all() {
    Gate g;
    g.kind = GateKind::HadamardAll;
    return g;
}

Gate Gate::make_cnot(int control, int target) {
    Gate g;
    g.kind = GateKind::Cnot;
    g.control = control;
    g.target = target;
    return g;
}

Gate Gate::make_measure(int qubit) {
    Gate g;
    g.kind = GateKind::Measure;
    g.qubit = qubit;
    return g;
}

Gate Gate::make_conditional_pauli(PauliLabel label, std::vector<int> condition) {
    Gate g;
    g.kind = GateKind::ConditionalPauli;
    g.pauli = std::move(label);
    g.condition = std::move(condition);
    return g;
}

int Circuit::num_measurements() const {
    int count = 0;
    for (const auto &gate : gates) {
        count += gate.kind == GateKind::Measure;
    }
    return count;
}

void Circuit::validate() const {
    if (n < 1 || n > BitVector::kMaxBits) {
        throw std::invalid_argument("circuit qubit count must be in [1, 64]");
    }
    auto check_qubit = [&](int q, size_t index) {
        if (q < 0 || q >= n) {
            throw std::invalid_argument("gate " + std::to_string(index) + ": qubit " + std::to_string(q) +
                                        " out of range");
        }
    };
    int measured = 0;
    for (size_t k = 0; k < gates.size(); k++) {
        const Gate &gate = gates[k];
        switch (gate.kind) {
            case GateKind::Pauli:
            case GateKind::ConditionalPauli:
                if (gate.pauli.size() != n) {
                    throw std::invalid_argument("gate " + std::to_string(k) + ": Pauli label length differs from n");
                }
                for (int idx : gate.condition) {
                    if (idx < 0 || idx >= measured) {
                        throw std::invalid_argument("gate " + std::to_string(k) + ": condition refers to outcome " +
                                                    std::to_string(idx) + " which is not yet measured");
                    }
                }
                break;
            case GateKind::HadamardAll:
                break;
            case GateKind::Cnot:
                check_qubit(gate.control, k);
                check_qubit(gate.target, k);
                if (gate.control == gate.target) {
                    throw std::invalid_argument("gate " + std::to_string(k) + ": CX control equals target");
                }
                break;
            case GateKind::Measure:
                check_qubit(gate.qubit, k);
                measured++;
                break;
        }
    }
}

std::string Circuit::str() const {
    std::ostringstream out;
    out << "n " << n << "\n";
    for (const auto &gate : gates) {
        switch (gate.kind) {
            case GateKind::Pauli:
                out << "P " << gate.pauli.u.str() << " " << gate.pauli.v.str() << "\n";
                break;
            case GateKind::HadamardAll:
                out << "HALL\n";
                break;
            case GateKind::Cnot:
                out << "CX " << gate.control << " " << gate.target << "\n";
                break;
            case GateKind::Measure:
                out << "M " << gate.qubit << "\n";
                break;
            case GateKind::ConditionalPauli:
                out << "P? " << gate.pauli.u.str() << " " << gate.pauli.v.str() << " if ";
                for (size_t k = 0; k < gate.condition.size(); k++) {
                    out << (k ? "^" : "") << gate.condition[k];
                }
                out << "\n";
                break;
        }
    }
    return out.str();
}

CircuitParseError::CircuitParseError(int line, int column, const std::string &message)
    : std::invalid_argument("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {
}

namespace {

struct Token {
    std::string_view text;
    int column;
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> tokens;
    size_t k = 0;
    while (k < line.size()) {
        while (k < line.size() && (line[k] == ' ' || line[k] == '\t' || line[k] == '\r')) {
            k++;
        }
        size_t start = k;
        while (k < line.size() && line[k] != ' ' && line[k] != '\t' && line[k] != '\r') {
            k++;
        }
        if (k > start) {
            tokens.push_back({line.substr(start, k - start), static_cast<int>(start) + 1});
        }
    }
    return tokens;
}

class LineParser {
   public:
    LineParser(int line_number, std::vector<Token> tokens) : line_(line_number), tokens_(std::move(tokens)) {}

    [[noreturn]] void fail(const Token &at, const std::string &message) const {
        throw CircuitParseError(line_, at.column, message);
    }

    void expect_count(size_t count) const {
        if (tokens_.size() < count) {
            int column = tokens_.back().column + static_cast<int>(tokens_.back().text.size());
            throw CircuitParseError(line_, column, "expected " + std::to_string(count - 1) + " operand(s) after " +
                                                       std::string(tokens_[0].text));
        }
        if (tokens_.size() > count) {
            fail(tokens_[count], "unexpected token '" + std::string(tokens_[count].text) + "'");
        }
    }

    int integer(size_t k) const {
        const Token &t = tokens_.at(k);
        int value = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
        if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
            fail(t, "expected an integer, got '" + std::string(t.text) + "'");
        }
        return value;
    }

    int qubit(size_t k, int n) const {
        int q = integer(k);
        if (q < 0 || q >= n) {
            fail(tokens_[k], "qubit index " + std::to_string(q) + " out of range [0, " + std::to_string(n) + ")");
        }
        return q;
    }

    BitVector bits(size_t k, int n) const {
        const Token &t = tokens_.at(k);
        if (static_cast<int>(t.text.size()) != n) {
            fail(t, "expected " + std::to_string(n) + " bits, got '" + std::string(t.text) + "'");
        }
        try {
            return BitVector::parse(t.text);
        } catch (const std::invalid_argument &e) {
            fail(t, e.what());
        }
    }

    std::vector<int> parity(size_t k, int measured) const {
        const Token &t = tokens_.at(k);
        std::vector<int> indices;
        size_t start = 0;
        while (start <= t.text.size()) {
            size_t end = t.text.find('^', start);
            if (end == std::string_view::npos) {
                end = t.text.size();
            }
            std::string_view part = t.text.substr(start, end - start);
            int value = 0;
            auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
            if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
                throw CircuitParseError(line_, t.column + static_cast<int>(start),
                                        "bad outcome index '" + std::string(part) + "'");
            }
            if (value < 0 || value >= measured) {
                throw CircuitParseError(line_, t.column + static_cast<int>(start),
                                        "condition refers to outcome " + std::to_string(value) + " but only " +
                                            std::to_string(measured) + " measurement(s) precede this gate");
            }
            indices.push_back(value);
            start = end + 1;
        }
        return indices;
    }

    const std::vector<Token> &tokens() const { return tokens_; }

   private:
    int line_;
    std::vector<Token> tokens_;
};

}  // namespace

Circuit parse_circuit(std::string_view text) {
    Circuit circuit;
    bool have_header = false;
    int measured = 0;
    int line_number = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        line_number++;
        if (size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto tokens = tokenize(line);
        if (tokens.empty()) {
            continue;
        }
        LineParser p(line_number, tokens);
        std::string_view op = tokens[0].text;
        if (!have_header) {
            if (op != "n") {
                p.fail(tokens[0], "expected header 'n <qubits>' before any gate");
            }
            p.expect_count(2);
            circuit.n = p.integer(1);
            if (circuit.n < 1 || circuit.n > BitVector::kMaxBits) {
                p.fail(tokens[1], "qubit count must be in [1, 64]");
            }
            have_header = true;
            continue;
        }
        int n = circuit.n;
        if (op == "P") {
            p.expect_count(3);
            circuit.gates.push_back(Gate::make_pauli(PauliLabel(p.bits(1, n), p.bits(2, n))));
        } else if (op == "HALL") {
            p.expect_count(1);
            circuit.gates.push_back(Gate::make_hadamard_all());
        } else if (op == "CX") {
            p.expect_count(3);
            int c = p.qubit(1, n);
            int t = p.qubit(2, n);
            if (c == t) {
                p.fail(tokens[2], "CX control equals target");
            }
            circuit.gates.push_back(Gate::make_cnot(c, t));
        } else if (op == "M") {
            p.expect_count(2);
            circuit.gates.push_back(Gate::make_measure(p.qubit(1, n)));
            measured++;
        } else if (op == "P?") {
            p.expect_count(5);
            if (tokens[3].text != "if") {
                p.fail(tokens[3], "expected 'if'");
            }
            PauliLabel label(p.bits(1, n), p.bits(2, n));
            circuit.gates.push_back(Gate::make_conditional_pauli(label, p.parity(4, measured)));
        } else if (op == "n") {
            p.fail(tokens[0], "duplicate header");
        } else {
            p.fail(tokens[0], "unknown gate '" + std::string(op) + "'");
        }
    }
    if (!have_header) {
        throw CircuitParseError(line_number, 1, "missing header 'n <qubits>'");
    }
    return circuit;
}

}  // namespace kdsim
