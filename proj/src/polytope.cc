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

#include "kdsim/polytope.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "kdsim/kd.h"

namespace kdsim {

// ---------------------------------------------------------------------------
// Pauli coordinates.

namespace {

/// Column k of the Pauli string with basis index p: P|k> = i^phase |row>.
struct PauliEntry {
    uint64_t row;
    int phase;
};

PauliEntry pauli_column(uint64_t p, int n, uint64_t k) {
    uint64_t row = k;
    int phase = 0;
    for (int j = 0; j < n; j++) {
        int letter = static_cast<int>((p >> (2 * (n - 1 - j))) & 3);
        uint64_t bit = uint64_t{1} << (n - 1 - j);
        bool set = (k & bit) != 0;
        switch (letter) {
            case 1:  // X
                row ^= bit;
                break;
            case 2:  // Y|0> = i|1>, Y|1> = -i|0>
                row ^= bit;
                phase += set ? 3 : 1;
                break;
            case 3:  // Z
                phase += set ? 2 : 0;
                break;
            default:
                break;
        }
    }
    return {row, phase & 3};
}

/// Re(i^phase z).
double rotate_real(int phase, Complex z) {
    switch (phase) {
        case 0:
            return z.real();
        case 1:
            return -z.imag();
        case 2:
            return -z.real();
        default:
            return z.imag();
    }
}

Complex i_power(int phase) {
    static const Complex values[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return values[phase & 3];
}

int coords_qubits(size_t size) {
    int n = 0;
    while ((size_t{1} << (2 * n)) < size) {
        n++;
    }
    if ((size_t{1} << (2 * n)) != size || n < 1) {
        throw std::invalid_argument("Pauli coordinate vector length must be 4^n");
    }
    return n;
}

constexpr int kMaxCoordQubits = 6;

void check_coord_qubits(int n) {
    if (n < 1 || n > kMaxCoordQubits) {
        throw std::invalid_argument("Pauli coordinates support 1 <= n <= " + std::to_string(kMaxCoordQubits));
    }
}

}  // namespace

std::vector<double> pauli_coords(const DensityMatrix &rho, bool require_real) {
    check_coord_qubits(rho.n);
    if (require_real && !is_real_state(rho)) {
        throw std::invalid_argument("state is not a rebit state (its density matrix has imaginary entries)");
    }
    uint64_t d = uint64_t{1} << rho.n;
    std::vector<double> r(size_t{1} << (2 * rho.n));
    for (uint64_t p = 0; p < r.size(); p++) {
        double total = 0;
        for (uint64_t k = 0; k < d; k++) {
            auto e = pauli_column(p, rho.n, k);
            // Tr(rho P) = sum_k rho[k][row] P[row][k].
            total += rotate_real(e.phase, rho.mat(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(e.row)));
        }
        r[p] = total / static_cast<double>(d);
    }
    return r;
}

RationalVector exact_pauli_coords(const DensityMatrix &rho) {
    check_coord_qubits(rho.n);
    uint64_t d = uint64_t{1} << rho.n;
    RationalVector r(size_t{1} << (2 * rho.n));
    for (uint64_t p = 0; p < r.size(); p++) {
        Rational total = 0;
        for (uint64_t k = 0; k < d; k++) {
            auto e = pauli_column(p, rho.n, k);
            Complex z = rho.mat(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(e.row));
            switch (e.phase) {
                case 0:
                    total += exact_rational(z.real());
                    break;
                case 1:
                    total -= exact_rational(z.imag());
                    break;
                case 2:
                    total -= exact_rational(z.real());
                    break;
                default:
                    total += exact_rational(z.imag());
                    break;
            }
        }
        r[p] = total / Rational(static_cast<long>(d));
    }
    return r;
}

DensityMatrix from_pauli_coords(const std::vector<double> &r) {
    int n = coords_qubits(r.size());
    check_coord_qubits(n);
    uint64_t d = uint64_t{1} << n;
    ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (uint64_t p = 0; p < r.size(); p++) {
        if (r[p] == 0) {
            continue;
        }
        for (uint64_t k = 0; k < d; k++) {
            auto e = pauli_column(p, n, k);
            m(static_cast<Eigen::Index>(e.row), static_cast<Eigen::Index>(k)) += r[p] * i_power(e.phase);
        }
    }
    return DensityMatrix(n, std::move(m));
}

// ---------------------------------------------------------------------------
// Double description.

namespace {

class Bitset {
   public:
    explicit Bitset(size_t bits = 0) : words_((bits + 63) / 64, 0) {}
    void set(size_t k) { words_[k / 64] |= uint64_t{1} << (k % 64); }
    size_t count() const {
        size_t c = 0;
        for (auto w : words_) {
            c += static_cast<size_t>(std::popcount(w));
        }
        return c;
    }
    Bitset operator&(const Bitset &o) const {
        Bitset r = *this;
        for (size_t k = 0; k < words_.size(); k++) {
            r.words_[k] &= o.words_[k];
        }
        return r;
    }
    bool contains(const Bitset &o) const {
        for (size_t k = 0; k < words_.size(); k++) {
            if ((o.words_[k] & ~words_[k]) != 0) {
                return false;
            }
        }
        return true;
    }

   private:
    std::vector<uint64_t> words_;
};

struct Ray {
    IntegerVector x;
    Bitset zero;
};

Integer integer_dot(const IntegerVector &a, const IntegerVector &b) {
    Integer total = 0;
    for (size_t k = 0; k < a.size(); k++) {
        if (sgn(a[k]) != 0 && sgn(b[k]) != 0) {
            total += a[k] * b[k];
        }
    }
    return total;
}

/// Extreme rays of the pointed cone {x : A x >= 0}; A must have full column rank.
std::vector<Ray> extreme_rays(const std::vector<IntegerVector> &a) {
    size_t rows = a.size();
    size_t m = a[0].size();

    std::vector<size_t> initial;
    std::vector<RationalVector> chosen;
    for (size_t i = 0; i < rows && initial.size() < m; i++) {
        auto trial = chosen;
        trial.emplace_back(a[i].begin(), a[i].end());
        if (rank(trial) == trial.size()) {
            chosen = std::move(trial);
            initial.push_back(i);
        }
    }
    if (initial.size() != m) {
        throw std::logic_error("constraint matrix is not of full column rank");
    }

    std::vector<Ray> rays;
    for (size_t j = 0; j < m; j++) {
        RationalVector e(m, Rational(0)), x;
        e[j] = 1;
        solve_exact(chosen, e, x);
        Ray ray{primitive_integer_vector(x), Bitset(rows)};
        for (size_t t = 0; t < m; t++) {
            if (t != j) {
                ray.zero.set(initial[t]);
            }
        }
        rays.push_back(std::move(ray));
    }

    std::vector<bool> processed(rows, false);
    for (size_t i : initial) {
        processed[i] = true;
    }
    for (size_t i = 0; i < rows; i++) {
        if (processed[i]) {
            continue;
        }
        processed[i] = true;
        std::vector<Integer> s(rays.size());
        std::vector<size_t> plus, minus;
        std::vector<Ray> next;
        for (size_t r = 0; r < rays.size(); r++) {
            s[r] = integer_dot(a[i], rays[r].x);
            int sign = sgn(s[r]);
            if (sign > 0) {
                plus.push_back(r);
            } else if (sign < 0) {
                minus.push_back(r);
            }
        }
        for (size_t p : plus) {
            for (size_t q : minus) {
                Bitset common = rays[p].zero & rays[q].zero;
                if (common.count() + 2 < m) {
                    continue;
                }
                bool adjacent = true;
                for (size_t t = 0; t < rays.size() && adjacent; t++) {
                    if (t != p && t != q && rays[t].zero.contains(common)) {
                        adjacent = false;
                    }
                }
                if (!adjacent) {
                    continue;
                }
                Ray ray{IntegerVector(m), common};
                Integer neg = -s[q];
                for (size_t c = 0; c < m; c++) {
                    ray.x[c] = s[p] * rays[q].x[c] + neg * rays[p].x[c];
                }
                make_primitive(ray.x);
                ray.zero.set(i);
                next.push_back(std::move(ray));
            }
        }
        for (size_t r = 0; r < rays.size(); r++) {
            int sign = sgn(s[r]);
            if (sign == 0) {
                rays[r].zero.set(i);
            }
            if (sign >= 0) {
                next.push_back(std::move(rays[r]));
            }
        }
        rays = std::move(next);
    }
    return rays;
}

}  // namespace

std::string Facet::str() const {
    std::ostringstream out;
    for (size_t k = 0; k < normal.size(); k++) {
        out << (k ? " " : "") << normal[k].get_str();
    }
    out << " | " << offset.get_str();
    return out.str();
}

std::string RationalPolytope::h_representation() const {
    std::string s;
    for (const auto &f : facets) {
        s += f.str() + "\n";
    }
    return s;
}

std::string RationalPolytope::v_representation_json() const {
    std::string s = "[";
    for (size_t v = 0; v < vertices.size(); v++) {
        s += v ? ",\n [" : "\n [";
        for (size_t k = 0; k < vertices[v].size(); k++) {
            s += (k ? ", \"" : "\"") + rational_to_string(vertices[v][k]) + "\"";
        }
        s += "]";
    }
    return s + "\n]\n";
}

RationalPolytope facet_enumeration(const std::vector<RationalVector> &input) {
    if (input.empty()) {
        throw std::invalid_argument("facet_enumeration needs at least one vertex");
    }
    RationalPolytope poly;
    poly.ambient_dim = input[0].size();
    for (const auto &v : input) {
        if (v.size() != poly.ambient_dim) {
            throw std::invalid_argument("vertices have different dimensions");
        }
        if (std::find(poly.vertices.begin(), poly.vertices.end(), v) == poly.vertices.end()) {
            poly.vertices.push_back(v);
        }
    }

    std::vector<RationalVector> directions;
    for (size_t v = 1; v < poly.vertices.size(); v++) {
        RationalVector d(poly.ambient_dim);
        for (size_t k = 0; k < poly.ambient_dim; k++) {
            d[k] = poly.vertices[v][k] - poly.vertices[0][k];
        }
        directions.push_back(std::move(d));
    }
    std::vector<size_t> pivots = row_reduce(directions);
    poly.affine_dim = static_cast<int>(pivots.size());
    if (pivots.empty()) {
        return poly;
    }

    // Row (1, -w) per vertex w in pivot coordinates, cleared of denominators.
    std::vector<IntegerVector> a;
    for (const auto &v : poly.vertices) {
        RationalVector row{Rational(1)};
        for (size_t p : pivots) {
            row.push_back(-v[p]);
        }
        a.push_back(primitive_integer_vector(row));
    }
    for (const auto &ray : extreme_rays(a)) {
        Facet f{IntegerVector(poly.ambient_dim, Integer(0)), ray.x[0]};
        for (size_t j = 0; j < pivots.size(); j++) {
            f.normal[pivots[j]] = ray.x[j + 1];
        }
        poly.facets.push_back(std::move(f));
    }
    std::sort(poly.facets.begin(), poly.facets.end());

    for (const auto &f : poly.facets) {
        RationalVector normal(f.normal.begin(), f.normal.end());
        std::vector<size_t> tight;
        for (size_t v = 0; v < poly.vertices.size(); v++) {
            Rational lhs = dot(normal, poly.vertices[v]);
            if (lhs > f.offset) {
                throw std::logic_error("facet enumeration produced an inequality violated by a vertex");
            }
            if (lhs == f.offset) {
                tight.push_back(v);
            }
        }
        poly.incidence.push_back(std::move(tight));
    }
    return poly;
}

std::vector<Facet> shared_facets(const RationalPolytope &a, const RationalPolytope &b) {
    if (a.ambient_dim != b.ambient_dim) {
        throw std::invalid_argument("polytopes live in different ambient spaces");
    }
    std::vector<Facet> fa = a.facets, fb = b.facets, out;
    std::sort(fa.begin(), fa.end());
    std::sort(fb.begin(), fb.end());
    std::set_intersection(fa.begin(), fa.end(), fb.begin(), fb.end(), std::back_inserter(out));
    return out;
}

// ---------------------------------------------------------------------------
// Vertex sets and membership.

const char *vertex_set_name(VertexSet set) {
    switch (set) {
        case VertexSet::Stabilizer:
            return "stabilizer";
        case VertexSet::Rebit:
            return "rebit";
        case VertexSet::Css:
            return "css";
    }
    return "?";
}

VertexSet parse_vertex_set(const std::string &name) {
    if (name == "stabilizer") {
        return VertexSet::Stabilizer;
    }
    if (name == "rebit") {
        return VertexSet::Rebit;
    }
    if (name == "css") {
        return VertexSet::Css;
    }
    throw std::invalid_argument("unknown vertex set '" + name + "' (expected stabilizer, rebit or css)");
}

namespace {

/// Stabilizer states have Tr(rho P) in {0, +1, -1}.
RationalVector stabilizer_coords(const PureState &psi) {
    auto r = pauli_coords(projector(psi));
    double scale = static_cast<double>(uint64_t{1} << psi.n);
    RationalVector out;
    for (double x : r) {
        double t = x * scale;
        double rounded = std::round(t);
        if (std::abs(t - rounded) > 1e-9) {
            throw std::logic_error("stabilizer state has a non-integer Pauli expectation");
        }
        out.push_back(Rational(static_cast<long>(rounded), static_cast<unsigned long>(scale)));
    }
    for (auto &x : out) {
        x.canonicalize();
    }
    return out;
}

std::vector<RationalVector> build_vertices(VertexSet set) {
    std::vector<PureState> states;
    switch (set) {
        case VertexSet::Stabilizer:
            states = enumerate_stabilizer_states(2, false);
            break;
        case VertexSet::Rebit:
            states = enumerate_stabilizer_states(2, true);
            break;
        case VertexSet::Css:
            states = enumerate_css_states(2);
            break;
    }
    std::vector<RationalVector> out;
    for (const auto &psi : states) {
        out.push_back(stabilizer_coords(psi));
    }
    return out;
}

}  // namespace

const std::vector<RationalVector> &two_qubit_vertices(VertexSet set) {
    static const std::vector<RationalVector> stabilizer = build_vertices(VertexSet::Stabilizer);
    static const std::vector<RationalVector> rebit = build_vertices(VertexSet::Rebit);
    static const std::vector<RationalVector> css = build_vertices(VertexSet::Css);
    switch (set) {
        case VertexSet::Rebit:
            return rebit;
        case VertexSet::Css:
            return css;
        default:
            return stabilizer;
    }
}

FeasibilityResult stabilizer_membership(const RationalVector &coords, VertexSet set) {
    if (coords.size() != 16) {
        throw std::invalid_argument("stabilizer membership expects 16 two-qubit Pauli coordinates");
    }
    return solve_feasibility_exact(two_qubit_vertices(set), coords);
}

FeasibilityResult stabilizer_membership(const DensityMatrix &rho, VertexSet set) {
    if (rho.n != 2) {
        throw std::invalid_argument("stabilizer membership is implemented for 2 qubits");
    }
    validate_density_matrix(rho);
    return stabilizer_membership(exact_pauli_coords(rho), set);
}

// ---------------------------------------------------------------------------
// Bound states.

RealMatrix matrix_F() {
    RealMatrix f(4, 4);
    f << 1, 0, 1, 1,  //
        0, 1, -1, -1,  //
        1, -1, -1, -2,  //
        1, -1, -2, -1;
    return f;
}

DensityMatrix rho_lambda(const RealMatrix &f, double lambda) {
    if (f.rows() != f.cols()) {
        throw std::invalid_argument("F must be square");
    }
    ComplexMatrix m = (RealMatrix::Identity(f.rows(), f.cols()) / static_cast<double>(f.rows()) + lambda * f)
                          .cast<Complex>();
    return DensityMatrix(std::move(m));
}

RationalVector facet_operator_coords(const Facet &facet) {
    if (facet.normal.size() != 16) {
        throw std::invalid_argument("facet operators are defined for 2-qubit Pauli coordinates");
    }
    if (sgn(facet.normal[0]) != 0) {
        throw std::invalid_argument("facet normal has an identity component");
    }
    if (sgn(facet.offset) <= 0) {
        throw std::invalid_argument("facet does not contain I/4 in its interior");
    }
    RationalVector f;
    for (const auto &a : facet.normal) {
        f.push_back(Rational(a, 4 * facet.offset));
    }
    for (auto &x : f) {
        x.canonicalize();
    }
    return f;
}

RealMatrix facet_operator(const Facet &facet) {
    auto f = facet_operator_coords(facet);
    std::vector<double> r;
    for (const auto &x : f) {
        r.push_back(x.get_d());
    }
    return from_pauli_coords(r).mat.real();
}

RationalVector exact_operator_coords(const RealMatrix &f) {
    return exact_pauli_coords(DensityMatrix(f.cast<Complex>()));
}

namespace {

template <typename Pred>
double bisect(Pred &&holds) {
    if (!holds(0.0)) {
        throw std::logic_error("bisection predicate fails at lambda = 0");
    }
    // Dyadic lambdas are exact doubles, so the exact LP sees the same point.
    double lo = 0, hi = 1.0 / 64;
    while (holds(hi)) {
        lo = hi;
        hi *= 2;
        if (hi > 1024) {
            throw std::runtime_error("bisection found no upper bracket");
        }
    }
    while (hi - lo > kBisectionTol) {
        double mid = (lo + hi) / 2;
        (holds(mid) ? lo : hi) = mid;
    }
    return (lo + hi) / 2;
}

}  // namespace

FacetScanResult bound_state_scan(const RationalVector &f_coords, size_t facet_id) {
    if (f_coords.size() != 16) {
        throw std::invalid_argument("bound_state_scan expects 16 two-qubit Pauli coordinates");
    }
    std::vector<double> fd;
    for (const auto &x : f_coords) {
        fd.push_back(x.get_d());
    }
    ComplexMatrix f = from_pauli_coords(fd).mat;
    ComplexMatrix quarter = ComplexMatrix::Identity(4, 4) / 4.0;

    FacetScanResult result;
    result.facet_id = facet_id;
    result.lambda_magic = bisect([&](double lambda) {
        RationalVector r(16);
        Rational l = exact_rational(lambda);
        for (size_t k = 0; k < 16; k++) {
            r[k] = l * f_coords[k];
        }
        r[0] += Rational(1, 4);
        return solve_feasibility_exact(two_qubit_vertices(VertexSet::Stabilizer), r).feasible;
    });
    result.lambda_sd = bisect([&](double lambda) {
        return min_eigenvalue(quarter + lambda * f) >= -kScanPositivityTol;
    });
    result.lambda_kdpos = bisect([&](double lambda) {
        return is_kd_positive(kd_distribution(ComplexMatrix(quarter + lambda * f)), kScanPositivityTol);
    });
    return result;
}

FacetScanResult bound_state_scan(const Facet &facet, size_t facet_id) {
    return bound_state_scan(facet_operator_coords(facet), facet_id);
}

std::vector<FacetScanResult> bound_state_scan_all(const std::vector<Facet> &facets, int workers) {
    two_qubit_vertices(VertexSet::Stabilizer);
    std::vector<FacetScanResult> results(facets.size());
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        try {
            for (size_t k = next++; k < facets.size(); k = next++) {
                results[k] = bound_state_scan(facets[k], k);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            failure = std::current_exception();
        }
    };
    workers = std::max(1, workers);
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; w++) {
            threads.emplace_back(work);
        }
        for (auto &t : threads) {
            t.join();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return results;
}

}  // namespace kdsim
