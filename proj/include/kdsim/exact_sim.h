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

#ifndef KDSIM_EXACT_SIM_H
#define KDSIM_EXACT_SIM_H

#include "kdsim/circuit.h"
#include "kdsim/phase_space_sim.h"
#include "kdsim/states.h"

namespace kdsim {

inline constexpr int kExactMaxQubits = 6;
inline constexpr int kExactMaxMeasurements = 12;

/// Dense density-matrix reference: branches on every measurement with the
/// projectors (I +- Z_j)/2 and returns the Born probability of each record.
ProbabilityMap exact_simulate(const Circuit &circuit, const DensityMatrix &rho);

}  // namespace kdsim

#endif
