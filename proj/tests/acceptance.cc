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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <thread>

#include "kdsim/exact_sim.h"
#include "kdsim/kd.h"
#include "kdsim/lp.h"
#include "kdsim/pauli.h"
#include "kdsim/phase_space_sim.h"
#include "kdsim/polytope.h"
#include "kdsim/states.h"
#include "kdsim/volume.h"
#include "test_util.h"

using namespace kdsim;
using kdsim_test::max_diff;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

class Check {
   public:
    void require(bool ok, const std::string &what) {
        if (!ok && out_.pass) {
            out_.pass = false;
            out_.detail = "failed: " + what;
        }
    }
    void note(const std::string &text) {
        if (out_.pass) {
            out_.detail += (out_.detail.empty() ? "" : "; ") + text;
        }
    }
    Outcome outcome() const { return out_; }

   private:
    Outcome out_;
};

std::string fmt(const char *format, double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), format, x);
    return buf;
}

BitVector bv(uint64_t k, int n) {
    return BitVector::from_index(k, n);
}

// Tolerances.
constexpr double kHudsonTol = 1e-10;
constexpr double kDgbrTol = 1e-10;
constexpr double kHermitianizationTol = 1e-12;
constexpr double kCovarianceTol = 1e-10;
constexpr double kTvTol = 0.01;
constexpr uint64_t kSimShots = 100000;
constexpr double kThresholdTol = 1e-3;
constexpr double kBuiltinFTol = 1e-6;
constexpr uint64_t kVolumeSamples = 1000000;
constexpr double kVolumeTolPp = 0.15;
constexpr double kManaTol = 1e-9;
constexpr double kAdditivityTol = 1e-10;

Outcome hudson() {
    Check c;
    for (int n = 1; n <= 2; n++) {
        auto css = enumerate_css_states(n);
        auto all = enumerate_stabilizer_states(n, false);
        size_t positive = 0;
        for (const auto &s : all) {
            bool is_css = false;
            for (const auto &t : css) {
                is_css = is_css || same_ray(s, t);
            }
            bool pos = is_kd_positive(projector(s), kHudsonTol);
            c.require(pos == is_css, "KD positivity differs from CSS membership");
            positive += pos;
        }
        c.require(positive == css.size(), "positive count differs from CSS count");
        c.note("n=" + std::to_string(n) + ": " + std::to_string(positive) + " of " + std::to_string(all.size()));
    }
    return c.outcome();
}

Outcome dgbr_connection() {
    Check c;
    double worst_w = 0, worst_a = 0;
    for (int n = 1; n <= 3; n++) {
        for (int k = 0; k < 100; k++) {
            DensityMatrix rho = kdsim_test::random_state(n);
            RealMatrix w = dgbr_distribution(rho);
            worst_w = std::max(worst_w, (w - kd_distribution(rho).table.real()).cwiseAbs().maxCoeff());
        }
        uint64_t d = uint64_t{1} << n;
        for (uint64_t g = 0; g < d; g++) {
            for (uint64_t x = 0; x < d; x++) {
                ComplexMatrix b = phase_point_operator_B(bv(g, n), bv(x, n));
                ComplexMatrix a = phase_point_operator_A(bv(g, n), bv(x, n)).cast<Complex>();
                worst_a = std::max(worst_a, max_diff(a, (b + b.adjoint()) / 2.0));
            }
        }
    }
    c.require(worst_w <= kDgbrTol, "max |W - Re Q| = " + fmt("%.3g", worst_w));
    c.require(worst_a <= kHermitianizationTol, "max |A - (B+B^dag)/2| = " + fmt("%.3g", worst_a));
    c.note("max |W - Re Q| = " + fmt("%.2g", worst_w) + ", max |A - herm(B)| = " + fmt("%.2g", worst_a));
    return c.outcome();
}

Outcome covariance() {
    Check c;
    double worst = 0;
    for (int k = 0; k < 100; k++) {
        for (int n = 2; n <= 3; n++) {
            uint64_t d = uint64_t{1} << n;
            DensityMatrix rho = kdsim_test::random_state(n);
            KDDistribution q = kd_distribution(rho);
            if (n == 2) {
                for (uint64_t u = 0; u < d; u++) {
                    for (uint64_t v = 0; v < d; v++) {
                        KDDistribution moved = kd_distribution(apply_unitary(rho, pauli_matrix({bv(u, n), bv(v, n)})));
                        for (uint64_t g = 0; g < d; g++) {
                            for (uint64_t x = 0; x < d; x++) {
                                worst = std::max(worst, std::abs(moved.table(g, x) - q.table(g ^ u, x ^ v)));
                            }
                        }
                    }
                }
            }
            KDDistribution h = kd_distribution(apply_unitary(rho, hadamard_all(n)));
            worst = std::max(worst, max_diff(h.table, q.table.transpose().conjugate()));
            for (int ct = 0; ct < n; ct++) {
                for (int tg = 0; tg < n; tg++) {
                    if (ct == tg) {
                        continue;
                    }
                    CnotMaps maps(ct, tg, n);
                    KDDistribution moved = kd_distribution(apply_unitary(rho, cnot_matrix(n, ct, tg)));
                    for (uint64_t g = 0; g < d; g++) {
                        for (uint64_t x = 0; x < d; x++) {
                            Complex expected = q.at(maps.map_group(bv(g, n)), maps.map_character(bv(x, n)));
                            worst = std::max(worst, std::abs(moved.table(g, x) - expected));
                        }
                    }
                }
            }
        }
        DensityMatrix a = kdsim_test::random_state(1 + k % 2);
        DensityMatrix b = kdsim_test::random_state(1 + (k / 2) % 2);
        KDDistribution qa = kd_distribution(a), qb = kd_distribution(b), qab = kd_distribution(tensor(a, b));
        Eigen::Index d2 = qb.table.rows();
        for (Eigen::Index g = 0; g < qab.table.rows(); g++) {
            for (Eigen::Index x = 0; x < qab.table.cols(); x++) {
                Complex expected = qa.table(g / d2, x / d2) * qb.table(g % d2, x % d2);
                worst = std::max(worst, std::abs(qab.table(g, x) - expected));
            }
        }
    }
    c.require(worst <= kCovarianceTol, "max deviation " + fmt("%.3g", worst));
    c.note("Pauli, H, CX and product relations, max deviation " + fmt("%.2g", worst));
    return c.outcome();
}

Outcome simulator() {
    Check c;
    std::vector<std::string> circuits = {
        "n 2\nCX 0 1\nM 0\nM 1\n",
        "n 2\nHALL\nCX 1 0\nM 0\nHALL\nM 1\n",
        "n 3\nP 100 011\nCX 0 2\nHALL\nM 2\nP? 010 001 if 0\nCX 2 1\nM 0\nM 1\n",
        "n 3\nCX 0 1\nCX 1 2\nM 0\nHALL\nM 1\nM 2\n",
        "n 3\nHALL\nM 0\nP? 011 000 if 0\nCX 1 2\nHALL\nM 1\nM 2\nM 0\n",
    };
    DensityMatrix rho_l = rho_lambda(matrix_F(), 0.06);
    double worst = 0;
    int runs = 0;
    uint64_t seed = 100;
    for (const auto &text : circuits) {
        Circuit circuit = parse_circuit(text);
        int n = circuit.n;
        std::vector<std::pair<PhasePointSampler, DensityMatrix>> inputs;
        auto specs = enumerate_css_specs(n);
        for (size_t k : {size_t{1}, specs.size() / 2, specs.size() - 1}) {
            inputs.emplace_back(PhasePointSampler::from_css(specs[k]), projector(specs[k].state()));
        }
        DensityMatrix lam = n == 2 ? rho_l : tensor(projector(character_state(BitVector(1))), rho_l);
        inputs.emplace_back(PhasePointSampler::from_table(kd_distribution(lam)), lam);
        for (const auto &[sampler, rho] : inputs) {
            Histogram h = run_shots(circuit, sampler, kSimShots, seed++);
            double tv = total_variation_distance(h, exact_simulate(circuit, rho));
            worst = std::max(worst, tv);
            runs++;
        }
    }
    c.require(worst <= kTvTol, "max TV distance " + fmt("%.4f", worst));
    c.note(std::to_string(runs) + " circuit/input pairs, max TV distance " + fmt("%.4f", worst));
    return c.outcome();
}

Outcome polytope_counts() {
    Check c;
    RationalPolytope rebit = facet_enumeration(two_qubit_vertices(VertexSet::Rebit));
    RationalPolytope css = facet_enumeration(two_qubit_vertices(VertexSet::Css));
    size_t shared = shared_facets(rebit, css).size();
    c.require(rebit.facets.size() == 120, "rebit facets " + std::to_string(rebit.facets.size()));
    c.require(css.facets.size() == 40, "css facets " + std::to_string(css.facets.size()));
    c.require(shared == 24, "shared facets " + std::to_string(shared));
    c.note("rebit " + std::to_string(rebit.facets.size()) + ", css " + std::to_string(css.facets.size()) +
           ", shared " + std::to_string(shared));
    return c.outcome();
}

Outcome thresholds() {
    Check c;
    RationalPolytope rebit = facet_enumeration(two_qubit_vertices(VertexSet::Rebit));
    RationalPolytope css = facet_enumeration(two_qubit_vertices(VertexSet::Css));
    auto shared = shared_facets(rebit, css);
    int workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    double worst = 0;
    for (const auto &r : bound_state_scan_all(shared, workers)) {
        worst = std::max({worst, std::abs(r.lambda_magic - 0.050), std::abs(r.lambda_sd - 0.065),
                          std::abs(r.lambda_kdpos - 0.083)});
    }
    c.require(!shared.empty(), "no shared facets");
    c.require(worst <= kThresholdTol, "shared-facet threshold deviation " + fmt("%.4g", worst));
    FacetScanResult f = bound_state_scan(exact_operator_coords(matrix_F()));
    double em = std::abs(f.lambda_magic - 1.0 / 20);
    double es = std::abs(f.lambda_sd - 1 / (4 + 8 * std::sqrt(2.0)));
    double ek = std::abs(f.lambda_kdpos - 1.0 / 12);
    c.require(em <= kBuiltinFTol && es <= kBuiltinFTol && ek <= kBuiltinFTol,
              "built-in F errors " + fmt("%.2g", em) + " " + fmt("%.2g", es) + " " + fmt("%.2g", ek));
    c.note(std::to_string(shared.size()) + " facets within " + fmt("%.2g", worst) + "; F: magic " +
           fmt("%.7f", f.lambda_magic) + ", sd " + fmt("%.7f", f.lambda_sd) + ", kdpos " +
           fmt("%.7f", f.lambda_kdpos));
    return c.outcome();
}

Outcome table_one() {
    Check c;
    const double expected[kNumCategories] = {1.5614, 2.9753, 0.6868, 94.7766};
    int workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    VolumeReport a = estimate_volumes(kVolumeSamples, 1, 1);
    VolumeReport b = estimate_volumes(kVolumeSamples, 1, std::max(3, workers));
    c.require(a.to_json() == b.to_json(), "reports differ across worker counts");
    std::string text;
    for (size_t k = 0; k < kNumCategories; k++) {
        Category cat = static_cast<Category>(k);
        double pct = 100 * a.fraction(cat);
        double se = 100 * a.stderr_of(cat);
        c.require(std::isfinite(se) && se > 0, "missing standard error");
        c.require(std::abs(pct - expected[k]) <= kVolumeTolPp,
                  std::string(category_name(cat)) + " at " + fmt("%.4f", pct) + "%");
        text += std::string(k ? ", " : "") + category_name(cat) + " " + fmt("%.4f", pct) + "(" + fmt("%.4f", se) +
                ")%";
    }
    c.require(a.kd_positive_not_dgbr_positive == 0, "KD-positive sample with negative DGBR entry");
    c.note(text);
    c.note("identical with 1 and " + std::to_string(std::max(3, workers)) + " workers");
    return c.outcome();
}

Outcome mana() {
    Check c;
    double worst_free = 0;
    for (int n = 1; n <= 3; n++) {
        for (const auto &psi : enumerate_css_states(n)) {
            DensityMatrix rho = projector(psi);
            c.require(is_kd_positive(rho, kManaTol) && kd_mana(rho) <= kManaTol, "CSS state with nonzero mana");
        }
    }
    auto css2 = enumerate_css_states(2);
    std::uniform_real_distribution<double> unif(0, 1);
    for (int k = 0; k < 100; k++) {
        ComplexMatrix mix = ComplexMatrix::Zero(4, 4);
        double total = 0;
        for (const auto &psi : css2) {
            double w = std::pow(unif(kdsim_test::test_rng()), 3);
            mix += w * projector(psi).mat;
            total += w;
        }
        DensityMatrix rho(2, mix / total);
        c.require(is_kd_positive(rho, kManaTol) && kd_mana(rho) <= kManaTol, "CSS mixture with nonzero mana");
    }
    for (int k = 0; k < 100; k++) {
        DensityMatrix rho = kdsim_test::random_state(1 + k % 3);
        c.require(!is_kd_positive(rho, kManaTol) && kd_mana(rho) > kManaTol, "nonpositive state with zero mana");
    }
    double worst_add = 0;
    for (int k = 0; k < 50; k++) {
        DensityMatrix a = kdsim_test::random_state(1 + k % 2);
        DensityMatrix b = kdsim_test::random_state(1 + (k / 2) % 2);
        worst_add = std::max(worst_add, std::abs(kd_mana(tensor(a, b)) - kd_mana(a) - kd_mana(b)));
    }
    c.require(worst_add <= kAdditivityTol, "additivity error " + fmt("%.3g", worst_add));
    auto css1 = enumerate_css_states(1);
    for (int k = 0; k < 100; k++) {
        int n = 2;
        DensityMatrix rho = kdsim_test::random_state(n);
        KDDistribution q = kd_distribution(rho);
        double m = kd_mana(q);
        std::vector<double> after = {
            kd_mana(apply_unitary(rho, pauli_matrix({bv(k % 4, n), bv((k / 4) % 4, n)}))),
            kd_mana(apply_unitary(rho, hadamard_all(n))),
            kd_mana(apply_unitary(rho, cnot_matrix(n, 0, 1))),
            kd_mana(apply_unitary(rho, cnot_matrix(n, 1, 0))),
            kd_mana(measurement_update(q, 0)),
            kd_mana(measurement_update(q, 1)),
            kd_mana(tensor(rho, projector(css1[k % css1.size()]))),
            kd_mana(partial_trace_first(rho, 1)),
        };
        for (double x : after) {
            worst_free = std::max(worst_free, x - m);
        }
    }
    c.require(worst_free <= kManaTol, "mana increased by " + fmt("%.3g", worst_free));
    DensityMatrix t = kdsim_test::t_state();
    double bound = distillation_lower_bound(t, tensor(t, t));
    c.require(std::abs(bound - 2) <= kAdditivityTol, "distillation bound " + fmt("%.12g", bound));
    c.note("additivity error " + fmt("%.2g", worst_add) + ", max increase under free ops " +
           fmt("%.2g", worst_free) + ", bound(rho, rho x rho) = " + fmt("%.10f", bound));
    return c.outcome();
}

Outcome three_qubit_bound_state() {
    Check c;
    DensityMatrix sigma = projector(computational_state(BitVector(1)));
    DensityMatrix rho = rho_lambda(matrix_F(), 0.06);
    DensityMatrix joint = tensor(sigma, rho);
    c.require(is_psd(joint), "joint state not PSD");
    c.require(is_kd_positive(joint, kScanPositivityTol), "joint state not KD-positive");
    DensityMatrix marginal = partial_trace_first(joint, 1);
    c.require(max_diff(marginal.mat, rho.mat) <= 1e-15, "marginal differs from rho_0.06");
    RationalVector coords = exact_pauli_coords(marginal);
    FeasibilityResult r = stabilizer_membership(coords);
    c.require(!r.feasible, "marginal is a stabilizer mixture");
    if (!r.feasible) {
        verify_feasibility_result(two_qubit_vertices(VertexSet::Stabilizer), coords, r);
        c.note("marginal infeasible, certificate verified exactly");
    }
    return c.outcome();
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char *name;
        double budget_seconds;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> criteria = {
        {1, "pure KD-positive stabilizer states are exactly the CSS states", 10, hudson},
        {2, "DGBR table is the real part of the KD table", 0, dgbr_connection},
        {3, "Pauli, Hadamard, CNOT covariance and product rule", 0, covariance},
        {4, "phase-space sampling matches exact simulation", 60, simulator},
        {5, "facet counts 120 / 40 / 24", 60, polytope_counts},
        {6, "bound-state thresholds", 0, thresholds},
        {7, "two-rebit volume fractions", 1800, table_one},
        {8, "KD mana is a faithful additive monotone", 0, mana},
        {9, "three-qubit bound magic state", 0, three_qubit_bound_state},
    };
    int failures = 0;
    for (const auto &cr : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = cr.run();
        } catch (const std::exception &e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (cr.budget_seconds > 0 && seconds > cr.budget_seconds) {
            out.pass = false;
            out.detail += "; exceeded " + fmt("%.0f", cr.budget_seconds) + " s budget";
        }
        failures += !out.pass;
        std::printf("[%s] criterion %d: %s (%s) [%.2f s]\n", out.pass ? "PASS" : "FAIL", cr.id, cr.name,
                    out.detail.c_str(), seconds);
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
