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

#include "kdsim/volume.h"

#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "json.hpp"
#include "kdsim/kd.h"
#include "kdsim/lp.h"
#include "kdsim/polytope.h"
#include "kdsim/rng.h"

namespace kdsim {

const char *category_name(Category c) {
    switch (c) {
        case Category::StabKdPos:
            return "STAB_KDPOS";
        case Category::StabKdNeg:
            return "STAB_KDNEG";
        case Category::MagicKdPos:
            return "MAGIC_KDPOS";
        case Category::MagicKdNeg:
            return "MAGIC_KDNEG";
    }
    return "?";
}

LpStats &LpStats::operator+=(const LpStats &o) {
    float_verdicts += o.float_verdicts;
    certified_bases += o.certified_bases;
    exact_solves += o.exact_solves;
    return *this;
}

namespace {

const std::vector<std::vector<double>> &float_stabilizer_columns() {
    static const std::vector<std::vector<double>> columns = [] {
        std::vector<std::vector<double>> out;
        for (const auto &v : two_qubit_vertices(VertexSet::Stabilizer)) {
            std::vector<double> col;
            for (const auto &x : v) {
                col.push_back(x.get_d());
            }
            out.push_back(std::move(col));
        }
        return out;
    }();
    return columns;
}

bool is_stabilizer_mixture(const DensityMatrix &rho, LpStats &stats) {
    auto hint = solve_feasibility_float(float_stabilizer_columns(), pauli_coords(rho));
    if (hint.converged && hint.infeasibility > kFloatLpMargin) {
        stats.float_verdicts++;
        return false;
    }
    const auto &columns = two_qubit_vertices(VertexSet::Stabilizer);
    RationalVector coords = exact_pauli_coords(rho);
    if (hint.converged) {
        if (auto certified = certify_basis(columns, coords, hint)) {
            stats.certified_bases++;
            return certified->feasible;
        }
    }
    stats.exact_solves++;
    return solve_feasibility_exact(columns, coords).feasible;
}

}  // namespace

Category classify_state(const DensityMatrix &rho, double kd_tol, LpStats *stats) {
    if (rho.n != 2) {
        throw std::invalid_argument("volume classification is defined for 2-qubit states");
    }
    if (!is_real_state(rho, 0.0)) {
        throw std::invalid_argument("volume classification requires a rebit (real) density matrix");
    }
    validate_density_matrix(rho);
    LpStats local;
    bool kd_positive = is_kd_positive(kd_distribution(rho.mat), kd_tol);
    bool stabilizer = is_stabilizer_mixture(rho, stats ? *stats : local);
    if (stabilizer) {
        return kd_positive ? Category::StabKdPos : Category::StabKdNeg;
    }
    return kd_positive ? Category::MagicKdPos : Category::MagicKdNeg;
}

double VolumeReport::fraction(Category c) const {
    return samples == 0 ? 0.0 : static_cast<double>(counts[static_cast<size_t>(c)]) / static_cast<double>(samples);
}

double VolumeReport::stderr_of(Category c) const {
    if (samples == 0) {
        return 0.0;
    }
    double p = fraction(c);
    return std::sqrt(p * (1 - p) / static_cast<double>(samples));
}

std::string VolumeReport::to_json() const {
    nlohmann::ordered_json j;
    j["samples"] = samples;
    j["seed"] = seed;
    j["kd_tol"] = kd_tol;
    nlohmann::ordered_json cats = nlohmann::ordered_json::array();
    for (size_t k = 0; k < kNumCategories; k++) {
        auto c = static_cast<Category>(k);
        cats.push_back({{"category", category_name(c)},
                        {"count", counts[k]},
                        {"fraction", fraction(c)},
                        {"stderr", stderr_of(c)}});
    }
    j["categories"] = cats;
    j["lp"] = {{"float_verdicts", lp.float_verdicts},
               {"certified_bases", lp.certified_bases},
               {"exact_solves", lp.exact_solves}};
    j["kd_positive_not_dgbr_positive"] = kd_positive_not_dgbr_positive;
    return j.dump(2) + "\n";
}

std::string VolumeReport::to_tsv() const {
    std::ostringstream out;
    out.precision(10);
    out << "category\tcount\tfraction\tstderr\n";
    for (size_t k = 0; k < kNumCategories; k++) {
        auto c = static_cast<Category>(k);
        out << category_name(c) << "\t" << counts[k] << "\t" << fraction(c) << "\t" << stderr_of(c) << "\n";
    }
    return out.str();
}

VolumeReport estimate_volumes(uint64_t samples, uint64_t seed, int workers, double kd_tol) {
    if (samples < 1) {
        throw std::invalid_argument("samples must be at least 1");
    }
    workers = std::max(1, workers);
    float_stabilizer_columns();

    struct Partial {
        std::array<uint64_t, kNumCategories> counts{};
        LpStats lp;
        uint64_t inconsistent = 0;
    };
    std::vector<Partial> partial(static_cast<size_t>(workers));
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&](int w) {
        try {
            Partial &mine = partial[static_cast<size_t>(w)];
            uint64_t begin = samples * static_cast<uint64_t>(w) / static_cast<uint64_t>(workers);
            uint64_t end = samples * static_cast<uint64_t>(w + 1) / static_cast<uint64_t>(workers);
            for (uint64_t i = begin; i < end; i++) {
                CounterRng rng(seed, i);
                DensityMatrix rho = ginibre_rebit_sample(2, rng);
                Category c = classify_state(rho, kd_tol, &mine.lp);
                mine.counts[static_cast<size_t>(c)]++;
                if (c == Category::StabKdPos || c == Category::MagicKdPos) {
                    if (dgbr_distribution(rho).minCoeff() < -kd_tol) {
                        mine.inconsistent++;
                    }
                }
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            failure = std::current_exception();
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; w++) {
            threads.emplace_back(work, w);
        }
        for (auto &t : threads) {
            t.join();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    VolumeReport report;
    report.samples = samples;
    report.seed = seed;
    report.kd_tol = kd_tol;
    for (const auto &p : partial) {
        for (size_t k = 0; k < kNumCategories; k++) {
            report.counts[k] += p.counts[k];
        }
        report.lp += p.lp;
        report.kd_positive_not_dgbr_positive += p.inconsistent;
    }
    return report;
}

}  // namespace kdsim
