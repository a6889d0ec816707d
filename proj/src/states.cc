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

#include "kdsim/states.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "kdsim/pauli.h"

namespace kdsim {

DensityMatrix::DensityMatrix(int n_, ComplexMatrix mat_) : n(n_), mat(std::move(mat_)) {
    if (mat.rows() != mat.cols() || mat.rows() != (Eigen::Index{1} << n)) {
        throw std::invalid_argument("density matrix dimension does not match 2^" + std::to_string(n));
    }
}

DensityMatrix::DensityMatrix(ComplexMatrix mat_) : n(qubits_for_dimension(mat_.rows())), mat(std::move(mat_)) {
    if (mat.rows() != mat.cols()) {
        throw std::invalid_argument("density matrix must be square");
    }
}

void validate_density_matrix(const DensityMatrix &rho, double tol) {
    if (rho.mat.rows() != rho.mat.cols() || rho.mat.rows() != (Eigen::Index{1} << rho.n)) {
        throw std::invalid_argument("density matrix dimension does not match its qubit count");
    }
    if (!is_hermitian(rho.mat, tol)) {
        throw std::invalid_argument("density matrix is not Hermitian");
    }
    Complex trace = rho.mat.trace();
    if (std::abs(trace - Complex{1, 0}) > tol) {
        throw std::invalid_argument("density matrix trace is " + std::to_string(trace.real()) + ", expected 1");
    }
    double lowest = min_eigenvalue(rho.mat);
    if (lowest < -tol) {
        throw std::invalid_argument("density matrix has negative eigenvalue " + std::to_string(lowest));
    }
}

DensityMatrix projector(const PureState &psi) {
    return DensityMatrix(psi.n, psi.amp * psi.amp.adjoint());
}

DensityMatrix maximally_mixed(int n) {
    check_dense_qubits(n);
    Eigen::Index d = Eigen::Index{1} << n;
    return DensityMatrix(n, ComplexMatrix::Identity(d, d) / static_cast<double>(d));
}

DensityMatrix tensor(const DensityMatrix &a, const DensityMatrix &b) {
    check_dense_qubits(a.n + b.n);
    return DensityMatrix(a.n + b.n, kron(a.mat, b.mat));
}

// ---------------------------------------------------------------------------
// Subgroups.

namespace {

/// Inserts x into an echelon basis keyed by leading bit; returns false if dependent.
bool insert_into_echelon(std::map<uint64_t, uint64_t, std::greater<>> &echelon, uint64_t x) {
    while (x != 0) {
        uint64_t lead = uint64_t{1} << (63 - __builtin_clzll(x));
        auto it = echelon.find(lead);
        if (it == echelon.end()) {
            echelon.emplace(lead, x);
            return true;
        }
        x ^= it->second;
    }
    return false;
}

}  // namespace

Subgroup Subgroup::span(int n, const std::vector<BitVector> &generators) {
    Subgroup result;
    result.n_ = n;
    std::map<uint64_t, uint64_t, std::greater<>> echelon;
    for (const auto &gen : generators) {
        if (gen.size() != n) {
            throw std::invalid_argument("subgroup generator has length " + std::to_string(gen.size()) + ", expected " +
                                        std::to_string(n));
        }
        if (insert_into_echelon(echelon, gen.index())) {
            result.generators_.push_back(gen);
        }
    }
    size_t rank = result.generators_.size();
    if (rank > 20) {
        throw std::invalid_argument("subgroup too large to enumerate");
    }
    result.members_.reserve(size_t{1} << rank);
    for (uint64_t combo = 0; combo < (uint64_t{1} << rank); combo++) {
        BitVector member(n);
        for (size_t k = 0; k < rank; k++) {
            if ((combo >> k) & 1) {
                member += result.generators_[k];
            }
        }
        result.members_.push_back(member);
    }
    std::sort(result.members_.begin(), result.members_.end());
    return result;
}

Subgroup Subgroup::from_members(int n, const std::vector<BitVector> &members) {
    std::set<BitVector> set(members.begin(), members.end());
    if (set.size() != members.size()) {
        throw std::invalid_argument("subgroup members contain duplicates");
    }
    if (!set.contains(BitVector(n))) {
        throw std::invalid_argument("subgroup does not contain the identity");
    }
    for (const auto &a : set) {
        for (const auto &b : set) {
            if (!set.contains(a + b)) {
                throw std::invalid_argument("subset is not closed under addition: " + a.str() + " + " + b.str());
            }
        }
    }
    return span(n, members);
}

bool Subgroup::contains(const BitVector &x) const {
    return std::binary_search(members_.begin(), members_.end(), x);
}

std::vector<BitVector> Subgroup::perp_members() const {
    if (n_ > 20) {
        throw std::invalid_argument("perp_members scans 2^n characters; n too large");
    }
    std::vector<BitVector> result;
    for (uint64_t c = 0; c < (uint64_t{1} << n_); c++) {
        BitVector chi = BitVector::from_index(c, n_);
        bool trivial = std::all_of(generators_.begin(), generators_.end(), [&](const BitVector &h) {
            return chi.dot(h) == 0;
        });
        if (trivial) {
            result.push_back(chi);
        }
    }
    return result;
}

std::vector<BitVector> orthogonal_complement_basis(int n, const std::vector<BitVector> &generators) {
    // Row-reduce the generator matrix over GF(2), then read off one null vector per free column.
    std::vector<BitVector> rows;
    std::vector<int> pivot_cols;
    for (const auto &gen : generators) {
        BitVector row = gen;
        for (size_t r = 0; r < rows.size(); r++) {
            if (row.get(pivot_cols[r])) {
                row += rows[r];
            }
        }
        if (row.is_zero()) {
            continue;
        }
        int pivot = 0;
        while (!row.get(pivot)) {
            pivot++;
        }
        for (size_t r = 0; r < rows.size(); r++) {
            if (rows[r].get(pivot)) {
                rows[r] += row;
            }
        }
        rows.push_back(row);
        pivot_cols.push_back(pivot);
    }
    std::vector<bool> is_pivot(n, false);
    for (int p : pivot_cols) {
        is_pivot[p] = true;
    }
    std::vector<BitVector> basis;
    for (int free = 0; free < n; free++) {
        if (is_pivot[free]) {
            continue;
        }
        BitVector null = BitVector::unit(free, n);
        for (size_t r = 0; r < rows.size(); r++) {
            if (rows[r].get(free)) {
                null.set(pivot_cols[r], true);
            }
        }
        basis.push_back(null);
    }
    return basis;
}

// ---------------------------------------------------------------------------
// Named states.

PureState computational_state(const BitVector &g) {
    check_dense_qubits(g.size());
    PureState psi{g.size(), ComplexVector::Zero(Eigen::Index{1} << g.size())};
    psi.amp(g.index()) = 1.0;
    return psi;
}

PureState character_state(const BitVector &chi) {
    int n = chi.size();
    check_dense_qubits(n);
    Eigen::Index d = Eigen::Index{1} << n;
    PureState psi{n, ComplexVector(d)};
    double scale = 1.0 / std::sqrt(static_cast<double>(d));
    for (Eigen::Index g = 0; g < d; g++) {
        psi.amp(g) = scale * character_eval(chi, BitVector::from_index(g, n));
    }
    return psi;
}

PureState css_state(const Subgroup &h, const BitVector &g, const BitVector &chi) {
    int n = h.n();
    check_dense_qubits(n);
    if (g.size() != n || chi.size() != n) {
        throw std::invalid_argument("css_state: g and chi must have the subgroup's length");
    }
    PureState psi{n, ComplexVector::Zero(Eigen::Index{1} << n)};
    double scale = 1.0 / std::sqrt(static_cast<double>(h.order()));
    // P_{g,chi}|h> = (-1)^{chi.(h+g)} |h+g>.
    for (const auto &member : h.members()) {
        BitVector shifted = member + g;
        psi.amp(shifted.index()) = scale * character_eval(chi, shifted);
    }
    return psi;
}

std::vector<Subgroup> enumerate_subgroups(int n) {
    if (n < 1 || n > 4) {
        throw std::invalid_argument("enumerate_subgroups supports 1 <= n <= 4");
    }
    auto key_of = [](const Subgroup &s) {
        uint32_t key = 0;
        for (const auto &m : s.members()) {
            key |= uint32_t{1} << m.index();
        }
        return key;
    };
    std::vector<Subgroup> result{Subgroup::span(n, {})};
    std::set<uint32_t> seen{key_of(result[0])};
    for (size_t i = 0; i < result.size(); i++) {
        for (uint64_t x = 1; x < (uint64_t{1} << n); x++) {
            BitVector element = BitVector::from_index(x, n);
            if (result[i].contains(element)) {
                continue;
            }
            auto gens = result[i].generators();
            gens.push_back(element);
            Subgroup bigger = Subgroup::span(n, gens);
            if (seen.insert(key_of(bigger)).second) {
                result.push_back(std::move(bigger));
            }
        }
    }
    return result;
}

bool same_ray(const PureState &a, const PureState &b) {
    if (a.amp.size() != b.amp.size()) {
        return false;
    }
    return std::abs(a.amp.dot(b.amp)) >= 1.0 - 1e-9;
}

namespace {

void push_unique(std::vector<PureState> &states, PureState psi) {
    for (const auto &existing : states) {
        if (same_ray(existing, psi)) {
            return;
        }
    }
    states.push_back(std::move(psi));
}

/// Fixes the global phase so the first significant amplitude is real positive.
PureState canonical_phase(PureState psi) {
    for (Eigen::Index k = 0; k < psi.amp.size(); k++) {
        if (std::abs(psi.amp(k)) > 1e-9) {
            Complex phase = psi.amp(k) / std::abs(psi.amp(k));
            psi.amp /= phase;
            break;
        }
    }
    return psi;
}

}  // namespace

std::vector<PureState> enumerate_css_states(int n) {
    if (n < 1 || n > 3) {
        throw std::invalid_argument("enumerate_css_states supports 1 <= n <= 3");
    }
    std::vector<PureState> result;
    uint64_t d = uint64_t{1} << n;
    for (const auto &h : enumerate_subgroups(n)) {
        for (uint64_t g = 0; g < d; g++) {
            for (uint64_t chi = 0; chi < d; chi++) {
                push_unique(result, css_state(h, BitVector::from_index(g, n), BitVector::from_index(chi, n)));
            }
        }
    }
    return result;
}

std::vector<PureState> enumerate_stabilizer_states(int n, bool rebit_only) {
    if (n < 1 || n > 2) {
        throw std::invalid_argument("enumerate_stabilizer_states supports 1 <= n <= 2");
    }
    Eigen::Index d = Eigen::Index{1} << n;
    int num_paulis = 1 << (2 * n);
    std::vector<ComplexMatrix> paulis;
    for (int k = 1; k < num_paulis; k++) {
        paulis.push_back(pauli_string_matrix(pauli_basis_letters(k, n)));
    }
    ComplexMatrix identity = ComplexMatrix::Identity(d, d);

    std::vector<PureState> result;
    // Depth-first choice of n commuting signed generators; a rank-1 product of
    // (I + s P)/2 factors is a stabilizer state.
    std::vector<ComplexMatrix> chosen;
    auto recurse = [&](auto &&self, size_t start) -> void {
        if (static_cast<int>(chosen.size()) == n) {
            ComplexMatrix proj = identity;
            for (const auto &s : chosen) {
                proj = proj * (identity + s) / 2.0;
            }
            if (std::abs(proj.trace() - Complex{1, 0}) > 1e-9) {
                return;
            }
            Eigen::Index best = 0;
            proj.colwise().norm().maxCoeff(&best);
            PureState psi{n, proj.col(best).normalized()};
            if (rebit_only && !is_real_state(projector(psi), 1e-9)) {
                return;
            }
            push_unique(result, canonical_phase(std::move(psi)));
            return;
        }
        for (size_t k = start; k < paulis.size(); k++) {
            bool commutes = std::all_of(chosen.begin(), chosen.end(), [&](const ComplexMatrix &s) {
                return max_abs_entry(s * paulis[k] - paulis[k] * s) < 1e-12;
            });
            if (!commutes) {
                continue;
            }
            for (double sign : {1.0, -1.0}) {
                chosen.push_back(sign * paulis[k]);
                self(self, k + 1);
                chosen.pop_back();
            }
        }
    };
    recurse(recurse, 0);
    return result;
}

// ---------------------------------------------------------------------------
// Sampling, gates, channels.

DensityMatrix ginibre_rebit_sample(int n, CounterRng &rng) {
    check_dense_qubits(n);
    Eigen::Index d = Eigen::Index{1} << n;
    while (true) {
        RealMatrix a(d, d);
        for (Eigen::Index i = 0; i < d; i++) {
            for (Eigen::Index j = 0; j < d; j++) {
                a(i, j) = rng.normal();
            }
        }
        RealMatrix product = a * a.transpose();
        product = ((product + product.transpose()) / 2).eval();
        double trace = product.trace();
        if (trace > 0) {
            return DensityMatrix(n, (product / trace).cast<Complex>());
        }
    }
}

ComplexMatrix hadamard_all(int n) {
    check_dense_qubits(n);
    Eigen::Index d = Eigen::Index{1} << n;
    ComplexMatrix h(d, d);
    double scale = 1.0 / std::sqrt(static_cast<double>(d));
    for (Eigen::Index r = 0; r < d; r++) {
        for (Eigen::Index c = 0; c < d; c++) {
            h(r, c) = scale * character_eval(BitVector::from_index(r, n), BitVector::from_index(c, n));
        }
    }
    return h;
}

ComplexMatrix cnot_matrix(int n, int control, int target) {
    check_dense_qubits(n);
    CnotMaps maps(control, target, n);
    Eigen::Index d = Eigen::Index{1} << n;
    ComplexMatrix u = ComplexMatrix::Zero(d, d);
    for (Eigen::Index g = 0; g < d; g++) {
        u(maps.map_group(BitVector::from_index(g, n)).index(), g) = 1.0;
    }
    return u;
}

DensityMatrix apply_unitary(const DensityMatrix &rho, const ComplexMatrix &u, double tol) {
    if (u.rows() != rho.dim() || u.cols() != rho.dim()) {
        throw std::invalid_argument("apply_unitary: dimension mismatch");
    }
    ComplexMatrix identity = ComplexMatrix::Identity(u.rows(), u.cols());
    if (max_abs_entry(u * u.adjoint() - identity) > tol) {
        throw std::invalid_argument("apply_unitary: operator is not unitary");
    }
    return DensityMatrix(rho.n, u * rho.mat * u.adjoint());
}

DensityMatrix partial_trace_first(const DensityMatrix &rho, int k) {
    if (k < 1 || k >= rho.n) {
        throw std::invalid_argument("partial_trace_first: k must satisfy 1 <= k < n");
    }
    Eigen::Index rest = Eigen::Index{1} << (rho.n - k);
    Eigen::Index traced = Eigen::Index{1} << k;
    ComplexMatrix out = ComplexMatrix::Zero(rest, rest);
    for (Eigen::Index a = 0; a < traced; a++) {
        out += rho.mat.block(a * rest, a * rest, rest, rest);
    }
    return DensityMatrix(rho.n - k, out);
}

bool is_real_state(const DensityMatrix &rho, double tol) {
    return rho.mat.size() == 0 || rho.mat.imag().cwiseAbs().maxCoeff() <= tol;
}

bool is_psd(const DensityMatrix &rho, double tol) {
    return min_eigenvalue(rho.mat) >= -tol;
}

}  // namespace kdsim
