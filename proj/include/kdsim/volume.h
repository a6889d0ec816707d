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

#ifndef KDSIM_VOLUME_H
#define KDSIM_VOLUME_H

#include <array>
#include <cstdint>
#include <string>

#include "kdsim/states.h"

namespace kdsim {

enum class Category { StabKdPos = 0, StabKdNeg = 1, MagicKdPos = 2, MagicKdNeg = 3 };

inline constexpr size_t kNumCategories = 4;
inline constexpr double kVolumeKdTol = 1e-9;
/// Float LP verdicts of "magic" are trusted when the phase-one optimum exceeds this.
inline constexpr double kFloatLpMargin = 1e-7;

const char *category_name(Category c);

/// How each stabilizer-membership verdict was reached.
struct LpStats {
    uint64_t float_verdicts = 0;
    uint64_t certified_bases = 0;
    uint64_t exact_solves = 0;

    LpStats &operator+=(const LpStats &o);
};

/// KD positivity at `kd_tol` plus stabilizer membership against the 60
/// two-qubit stabilizer states. Throws std::invalid_argument on anything
/// other than a 2-qubit rebit density matrix.
Category classify_state(const DensityMatrix &rho, double kd_tol = kVolumeKdTol, LpStats *stats = nullptr);

struct VolumeReport {
    uint64_t samples = 0;
    uint64_t seed = 0;
    double kd_tol = kVolumeKdTol;
    std::array<uint64_t, kNumCategories> counts{};
    LpStats lp;
    /// KD-positive samples whose DGBR table has a negative entry; always 0.
    uint64_t kd_positive_not_dgbr_positive = 0;

    double fraction(Category c) const;
    /// Binomial standard error sqrt(p (1 - p) / N).
    double stderr_of(Category c) const;

    std::string to_json() const;
    /// Columns category / count / fraction / stderr.
    std::string to_tsv() const;
};

/// Sample i is drawn from CounterRng(seed, i); the report does not depend on `workers`.
VolumeReport estimate_volumes(uint64_t samples, uint64_t seed, int workers = 1, double kd_tol = kVolumeKdTol);

}  // namespace kdsim

#endif
