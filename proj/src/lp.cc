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

#include "kdsim/lp.h"

#include <cmath>

namespace kdsim {

namespace {

constexpr double kFloatPivotTol = 1e-11;
constexpr size_t kMaxPivots = 100000;

int sign_of(const Rational &x) {
    return sgn(x);
}

int sign_of(double x) {
    return x > kFloatPivotTol ? 1 : x < -kFloatPivotTol ? -1 : 0;
}

bool is_zero(const Rational &x) {
    return sgn(x) == 0;
}

bool is_zero(double x) {
    return x == 0.0;
}

/// Dense phase-one tableau over T. Row m is the reduced-cost row.
template <typename T>
class Tableau {
   public:
    Tableau(const std::vector<std::vector<T>> &columns, const std::vector<T> &rhs, std::vector<int> signs)
        : m_(rhs.size()), k_(columns.size()), width_(k_ + m_ + 1), cells_((m_ + 1) * width_, T(0)),
          basis_(m_), signs_(std::move(signs)) {
        for (size_t i = 0; i < m_; i++) {
            for (size_t j = 0; j < k_; j++) {
                at(i, j) = signs_[i] < 0 ? T(-columns[j][i]) : columns[j][i];
            }
            at(i, k_ + i) = 1;
            at(i, width_ - 1) = signs_[i] < 0 ? T(-rhs[i]) : rhs[i];
            basis_[i] = k_ + i;
        }
        for (size_t j = 0; j < width_; j++) {
            if (j >= k_ && j < k_ + m_) {
                continue;
            }
            T total = 0;
            for (size_t i = 0; i < m_; i++) {
                total -= at(i, j);
            }
            at(m_, j) = total;
        }
    }

    /// Bland's rule to optimality. Returns false if the pivot budget runs out.
    bool run() {
        for (size_t iter = 0; iter < kMaxPivots; iter++) {
            size_t enter = width_;
            for (size_t j = 0; j + 1 < width_; j++) {
                if (sign_of(at(m_, j)) < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == width_) {
                return true;
            }
            size_t leave = m_;
            T best = 0;
            for (size_t i = 0; i < m_; i++) {
                if (sign_of(at(i, enter)) <= 0) {
                    continue;
                }
                T ratio = at(i, width_ - 1) / at(i, enter);
                if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == m_) {
                return false;
            }
            pivot(leave, enter);
        }
        return false;
    }

    T infeasibility() const { return -at(m_, width_ - 1); }
    T rhs(size_t i) const { return at(i, width_ - 1); }
    T reduced_cost(size_t j) const { return at(m_, j); }
    const std::vector<size_t> &basis() const { return basis_; }
    const std::vector<int> &signs() const { return signs_; }

   private:
    T &at(size_t i, size_t j) { return cells_[i * width_ + j]; }
    const T &at(size_t i, size_t j) const { return cells_[i * width_ + j]; }

    void pivot(size_t r, size_t c) {
        T inv = T(1) / at(r, c);
        for (size_t j = 0; j < width_; j++) {
            if (!is_zero(at(r, j))) {
                at(r, j) *= inv;
            }
        }
        at(r, c) = 1;
        for (size_t i = 0; i <= m_; i++) {
            if (i == r || is_zero(at(i, c))) {
                continue;
            }
            T f = at(i, c);
            for (size_t j = 0; j < width_; j++) {
                if (!is_zero(at(r, j))) {
                    at(i, j) -= f * at(r, j);
                }
            }
            at(i, c) = 0;
        }
        basis_[r] = c;
    }

    size_t m_, k_, width_;
    std::vector<T> cells_;
    std::vector<size_t> basis_;
    std::vector<int> signs_;
};

template <typename T>
void check_shape(const std::vector<std::vector<T>> &columns, const std::vector<T> &rhs) {
    if (rhs.empty()) {
        throw std::invalid_argument("feasibility problem has no rows");
    }
    for (const auto &col : columns) {
        if (col.size() != rhs.size()) {
            throw std::invalid_argument("feasibility problem column length differs from the row count");
        }
    }
}

}  // namespace

void verify_feasibility_result(const std::vector<RationalVector> &columns, const RationalVector &rhs,
                               const FeasibilityResult &result) {
    size_t m = rhs.size();
    if (result.feasible) {
        if (result.weights.size() != columns.size()) {
            throw LpSolverError("witness has the wrong number of weights");
        }
        RationalVector total(m, Rational(0));
        for (size_t j = 0; j < columns.size(); j++) {
            if (sgn(result.weights[j]) < 0) {
                throw LpSolverError("witness has a negative weight");
            }
            if (sgn(result.weights[j]) == 0) {
                continue;
            }
            for (size_t i = 0; i < m; i++) {
                total[i] += result.weights[j] * columns[j][i];
            }
        }
        if (total != rhs) {
            throw LpSolverError("witness does not reproduce the target");
        }
        return;
    }
    if (result.certificate.size() != m) {
        throw LpSolverError("certificate has the wrong length");
    }
    for (const auto &col : columns) {
        if (sgn(dot(result.certificate, col)) > 0) {
            throw LpSolverError("certificate does not separate a column");
        }
    }
    if (sgn(dot(result.certificate, rhs)) <= 0) {
        throw LpSolverError("certificate does not separate the target");
    }
}

FeasibilityResult solve_feasibility_exact(const std::vector<RationalVector> &columns, const RationalVector &rhs) {
    check_shape(columns, rhs);
    size_t m = rhs.size();
    size_t k = columns.size();
    std::vector<int> signs(m);
    for (size_t i = 0; i < m; i++) {
        signs[i] = sgn(rhs[i]) < 0 ? -1 : 1;
    }
    Tableau<Rational> t(columns, rhs, signs);
    if (!t.run()) {
        throw LpSolverError("exact simplex exceeded its pivot budget");
    }
    FeasibilityResult result;
    if (sgn(t.infeasibility()) == 0) {
        result.feasible = true;
        result.weights.assign(k, Rational(0));
        for (size_t i = 0; i < m; i++) {
            if (t.basis()[i] < k) {
                result.weights[t.basis()[i]] = t.rhs(i);
            }
        }
    } else {
        // Reduced cost of artificial i is 1 - y_i in the flipped system.
        result.certificate.resize(m);
        for (size_t i = 0; i < m; i++) {
            Rational y = 1 - t.reduced_cost(k + i);
            result.certificate[i] = signs[i] < 0 ? Rational(-y) : y;
        }
    }
    verify_feasibility_result(columns, rhs, result);
    return result;
}

FloatLpResult solve_feasibility_float(const std::vector<std::vector<double>> &columns, const std::vector<double> &rhs) {
    check_shape(columns, rhs);
    std::vector<int> signs(rhs.size());
    for (size_t i = 0; i < rhs.size(); i++) {
        signs[i] = rhs[i] < 0 ? -1 : 1;
    }
    Tableau<double> t(columns, rhs, signs);
    FloatLpResult result;
    result.converged = t.run();
    result.infeasibility = t.infeasibility();
    result.basis = t.basis();
    result.row_signs = t.signs();
    return result;
}

std::optional<FeasibilityResult> certify_basis(const std::vector<RationalVector> &columns, const RationalVector &rhs,
                                               const FloatLpResult &hint) {
    check_shape(columns, rhs);
    size_t m = rhs.size();
    size_t k = columns.size();
    if (hint.basis.size() != m || hint.row_signs.size() != m) {
        throw std::invalid_argument("basis hint does not match the problem");
    }
    // Basis matrix of the unflipped system; artificial i is signs[i] * e_i.
    std::vector<RationalVector> b(m, RationalVector(m, Rational(0)));
    for (size_t c = 0; c < m; c++) {
        size_t j = hint.basis[c];
        if (j < k) {
            for (size_t i = 0; i < m; i++) {
                b[i][c] = columns[j][i];
            }
        } else {
            b[j - k][c] = hint.row_signs[j - k];
        }
    }
    RationalVector x;
    if (!solve_exact(b, rhs, x)) {
        return std::nullopt;
    }
    bool feasible = true;
    for (size_t c = 0; c < m && feasible; c++) {
        int s = sgn(x[c]);
        feasible = hint.basis[c] < k ? s >= 0 : s == 0;
    }
    FeasibilityResult result;
    if (feasible) {
        result.feasible = true;
        result.weights.assign(k, Rational(0));
        for (size_t c = 0; c < m; c++) {
            if (hint.basis[c] < k) {
                result.weights[hint.basis[c]] = x[c];
            }
        }
        return result;
    }
    std::vector<RationalVector> bt(m, RationalVector(m));
    RationalVector cost(m);
    for (size_t r = 0; r < m; r++) {
        for (size_t c = 0; c < m; c++) {
            bt[r][c] = b[c][r];
        }
        cost[r] = hint.basis[r] < k ? 0 : 1;
    }
    RationalVector y;
    solve_exact(bt, cost, y);
    for (const auto &col : columns) {
        if (sgn(dot(y, col)) > 0) {
            return std::nullopt;
        }
    }
    if (sgn(dot(y, rhs)) <= 0) {
        return std::nullopt;
    }
    result.certificate = std::move(y);
    return result;
}

}  // namespace kdsim
