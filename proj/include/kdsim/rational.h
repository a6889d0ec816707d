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

#ifndef KDSIM_RATIONAL_H
#define KDSIM_RATIONAL_H

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace kdsim {

using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;
using IntegerVector = std::vector<Integer>;

/// Always "p/q" with q >= 1, e.g. "0/1", "-1/4".
std::string rational_to_string(const Rational &x);
/// Accepts "p/q" or an integer "p".
Rational parse_rational(std::string_view text);

/// Exact value of a finite double.
Rational exact_rational(double x);

Rational dot(const RationalVector &a, const RationalVector &b);

/// Scales to integers, divides by the gcd of all entries. The zero vector is returned unchanged.
IntegerVector primitive_integer_vector(const RationalVector &v);
void make_primitive(IntegerVector &v);

/// Row-reduced echelon form in place; returns the pivot column of each nonzero row.
std::vector<size_t> row_reduce(std::vector<RationalVector> &rows);
size_t rank(std::vector<RationalVector> rows);

/// Solves M x = rhs for square nonsingular M; returns false if M is singular.
bool solve_exact(std::vector<RationalVector> m, RationalVector rhs, RationalVector &x);

}  // namespace kdsim

#endif
