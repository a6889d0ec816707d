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

#ifndef KDSIM_POLYTOPE_H
#define KDSIM_POLYTOPE_H

#include <string>
#include <vector>

#include "kdsim/linalg.h"
#include "kdsim/lp.h"
#include "kdsim/rational.h"
#include "kdsim/states.h"

namespace kdsim {

/// r_P = Tr(rho P) / 2^n over the 4^n Pauli strings, ordered as in
/// `pauli_basis_letters`. Throws on non-real rho when `require_real` is set.
std::vector<double> pauli_coords(const DensityMatrix &rho, bool require_real = false);
/// Exact coordinates of the Hermitian part of rho, entries read as exact doubles.
RationalVector exact_pauli_coords(const DensityMatrix &rho);
/// rho = sum_P r_P P.
DensityMatrix from_pauli_coords(const std::vector<double> &r);

/// Inequality a . r <= b with a primitive integer normal.
struct Facet {
    IntegerVector normal;
    Integer offset;

    std::string str() const;
    bool operator==(const Facet &other) const { return normal == other.normal && offset == other.offset; }
    bool operator<(const Facet &other) const {
        return normal != other.normal ? normal < other.normal : offset < other.offset;
    }
};

/// Vertices and facets of conv(vertices) in exact rational coordinates.
///
/// Facets are computed in the coordinates of the affine hull that are pivots
/// of its direction space; other coordinates carry zero normal entries. Two
/// polytopes with the same affine hull therefore get comparable facets.
struct RationalPolytope {
    size_t ambient_dim = 0;
    int affine_dim = -1;
    std::vector<RationalVector> vertices;
    std::vector<Facet> facets;
    /// incidence[f] lists the vertices tight on facet f.
    std::vector<std::vector<size_t>> incidence;

    /// `a1 ... am | b` per facet.
    std::string h_representation() const;
    /// JSON array of vertex arrays of "p/q" strings.
    std::string v_representation_json() const;
};

/// Double description method over exact integers. Duplicate vertices are merged.
RationalPolytope facet_enumeration(const std::vector<RationalVector> &vertices);

/// Facets present in both, compared as canonical (normal, offset) pairs.
std::vector<Facet> shared_facets(const RationalPolytope &a, const RationalPolytope &b);

enum class VertexSet { Stabilizer, Rebit, Css };

const char *vertex_set_name(VertexSet set);
VertexSet parse_vertex_set(const std::string &name);

/// Exact Pauli coordinates of the 2-qubit vertex states (60, 24 or 20 of them).
const std::vector<RationalVector> &two_qubit_vertices(VertexSet set);

/// Decides whether the point lies in the convex hull of the vertex set.
/// Infeasible results carry the separating functional of `FeasibilityResult`:
/// y . s <= 0 for all vertices s and y . r > 0.
FeasibilityResult stabilizer_membership(const RationalVector &coords, VertexSet set = VertexSet::Stabilizer);
FeasibilityResult stabilizer_membership(const DensityMatrix &rho, VertexSet set = VertexSet::Stabilizer);

/// Built-in facet operator F of the bound-state family.
RealMatrix matrix_F();

/// I/4 + lambda F; not checked for positivity.
DensityMatrix rho_lambda(const RealMatrix &f, double lambda);

/// F = sum_P a_P P / (4 b), so Tr(F rho) <= 1 is the facet inequality.
RealMatrix facet_operator(const Facet &facet);
RationalVector facet_operator_coords(const Facet &facet);

struct FacetScanResult {
    size_t facet_id = 0;
    double lambda_magic = 0;
    double lambda_sd = 0;
    double lambda_kdpos = 0;
};

inline constexpr double kBisectionTol = 1e-6;
inline constexpr double kScanPositivityTol = 1e-12;

/// Largest lambda keeping I/4 + lambda F a stabilizer mixture, PSD and
/// KD-positive. Stabilizer membership is decided by the exact LP on exactly
/// represented lambda; the F coordinates must be exact.
FacetScanResult bound_state_scan(const RationalVector &f_coords, size_t facet_id = 0);
FacetScanResult bound_state_scan(const Facet &facet, size_t facet_id = 0);
std::vector<FacetScanResult> bound_state_scan_all(const std::vector<Facet> &facets, int workers = 1);

/// Exact Pauli coordinates of an integer operator such as matrix_F().
RationalVector exact_operator_coords(const RealMatrix &f);

}  // namespace kdsim

#endif
