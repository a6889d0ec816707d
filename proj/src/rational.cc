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

#include "kdsim/rational.h"

#include <cmath>
#include <stdexcept>

namespace kdsim {

std::string rational_to_string(const Rational &x) {
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) {
        throw std::invalid_argument("empty rational");
    }
    Rational r;
    if (r.set_str(s, 10) != 0) {
        throw std::invalid_argument("bad rational '" + s + "'");
    }
    if (r.get_den() == 0) {
        throw std::invalid_argument("zero denominator in '" + s + "'");
    }
    r.canonicalize();
    return r;
}

Rational exact_rational(double x) {
    if (!std::isfinite(x)) {
        throw std::invalid_argument("cannot convert a non-finite double to a rational");
    }
    return Rational(x);
}

Rational dot(const RationalVector &a, const RationalVector &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("dot: length mismatch");
    }
    Rational total = 0;
    for (size_t k = 0; k < a.size(); k++) {
        if (sgn(a[k]) != 0 && sgn(b[k]) != 0) {
            total += a[k] * b[k];
        }
    }
    return total;
}

void make_primitive(IntegerVector &v) {
    Integer g = 0;
    for (const auto &x : v) {
        g = gcd(g, x);
    }
    if (g > 1) {
        for (auto &x : v) {
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        }
    }
}

IntegerVector primitive_integer_vector(const RationalVector &v) {
    Integer l = 1;
    for (const auto &x : v) {
        l = lcm(l, x.get_den());
    }
    IntegerVector out;
    out.reserve(v.size());
    for (const auto &x : v) {
        out.push_back(x.get_num() * (l / x.get_den()));
    }
    make_primitive(out);
    return out;
}

std::vector<size_t> row_reduce(std::vector<RationalVector> &rows) {
    std::vector<size_t> pivots;
    if (rows.empty()) {
        return pivots;
    }
    size_t cols = rows[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows.size(); c++) {
        size_t found = r;
        while (found < rows.size() && sgn(rows[found][c]) == 0) {
            found++;
        }
        if (found == rows.size()) {
            continue;
        }
        std::swap(rows[r], rows[found]);
        Rational inv = 1 / rows[r][c];
        for (size_t k = c; k < cols; k++) {
            rows[r][k] *= inv;
        }
        for (size_t i = 0; i < rows.size(); i++) {
            if (i == r || sgn(rows[i][c]) == 0) {
                continue;
            }
            Rational f = rows[i][c];
            for (size_t k = c; k < cols; k++) {
                if (sgn(rows[r][k]) != 0) {
                    rows[i][k] -= f * rows[r][k];
                }
            }
        }
        pivots.push_back(c);
        r++;
    }
    return pivots;
}

size_t rank(std::vector<RationalVector> rows) {
    return row_reduce(rows).size();
}

bool solve_exact(std::vector<RationalVector> m, RationalVector rhs, RationalVector &x) {
    size_t n = m.size();
    if (rhs.size() != n) {
        throw std::invalid_argument("solve_exact: dimension mismatch");
    }
    for (size_t i = 0; i < n; i++) {
        if (m[i].size() != n) {
            throw std::invalid_argument("solve_exact: matrix is not square");
        }
    }
    for (size_t c = 0; c < n; c++) {
        size_t p = c;
        while (p < n && sgn(m[p][c]) == 0) {
            p++;
        }
        if (p == n) {
            return false;
        }
        std::swap(m[p], m[c]);
        std::swap(rhs[p], rhs[c]);
        for (size_t i = c + 1; i < n; i++) {
            if (sgn(m[i][c]) == 0) {
                continue;
            }
            Rational f = m[i][c] / m[c][c];
            for (size_t k = c; k < n; k++) {
                if (sgn(m[c][k]) != 0) {
                    m[i][k] -= f * m[c][k];
                }
            }
            rhs[i] -= f * rhs[c];
        }
    }
    x.assign(n, Rational(0));
    for (size_t i = n; i-- > 0;) {
        Rational s = rhs[i];
        for (size_t k = i + 1; k < n; k++) {
            if (sgn(m[i][k]) != 0) {
                s -= m[i][k] * x[k];
            }
        }
        x[i] = s / m[i][i];
    }
    return true;
}

}  // namespace kdsim
