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

#ifndef KDSIM_PHASE_SPACE_SIM_H
#define KDSIM_PHASE_SPACE_SIM_H

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kdsim/bitvector.h"
#include "kdsim/circuit.h"
#include "kdsim/kd.h"
#include "kdsim/rng.h"
#include "kdsim/states.h"

namespace kdsim {

/// Measurement bits of one trajectory, in measurement order.
struct ShotRecord {
    std::vector<uint8_t> bits;
    std::string str() const;
};

/// Counts keyed by the '0'/'1' string of each ShotRecord.
using Histogram = std::map<std::string, uint64_t>;
using ProbabilityMap = std::map<std::string, double>;

/// Thrown when an input table has an entry outside [0, inf) beyond tolerance.
class KdNonpositiveError : public std::runtime_error {
   public:
    explicit KdNonpositiveError(KDViolation violation);
    const KDViolation &violation() const { return violation_; }

   private:
    KDViolation violation_;
};

/// CSS input named as `css:H=<gen>,<gen>,...;g=<bits>;x=<bits>`.
struct CssSpec {
    int n = 0;
    std::vector<BitVector> generators;
    BitVector g;
    BitVector chi;

    static CssSpec parse(std::string_view text);
    std::string str() const;
    /// Dense state vector; n is limited by the dense-matrix cap.
    PureState state() const;
};

/// One spec per distinct CSS state: every subgroup H with g reduced modulo H
/// and chi reduced modulo H^perp (smallest coset member). n <= 4.
std::vector<CssSpec> enumerate_css_specs(int n);

/// Draws phase points (g, chi) with probability Q_{g,chi}.
///
/// A table-backed sampler clamps negative real parts of magnitude <= tol to
/// zero, drops imaginary parts of magnitude <= tol and renormalizes. A
/// CSS-backed sampler never builds a table: the KD table of |H; g, chi> is
/// uniform on (g + H) x (chi + H^perp).
class PhasePointSampler {
   public:
    static PhasePointSampler from_table(const KDDistribution &q, double tol = kDefaultTol);
    static PhasePointSampler from_css(const CssSpec &spec);

    int n() const { return n_; }
    PhasePoint sample(CounterRng &rng) const;

   private:
    int n_ = 0;
    std::vector<double> cdf_;
    BitVector css_g_;
    BitVector css_chi_;
    std::vector<BitVector> h_basis_;
    std::vector<BitVector> perp_basis_;
};

PhasePoint sample_phase_point(const KDDistribution &q, CounterRng &rng, double tol = kDefaultTol);

/// One pass of the phase-space algorithm from a sampled initial point.
ShotRecord run_trajectory(const Circuit &circuit, const PhasePointSampler &input, CounterRng &rng);

/// Trajectory i draws from CounterRng(seed, i), so the histogram depends only
/// on (circuit, input, shots, seed), not on `workers`.
Histogram run_shots(const Circuit &circuit, const PhasePointSampler &input, uint64_t shots, uint64_t seed,
                    int workers = 1);
Histogram run_shots(const Circuit &circuit, const DensityMatrix &rho, uint64_t shots, uint64_t seed,
                    double tol = kDefaultTol, int workers = 1);

double total_variation_distance(const Histogram &counts, const ProbabilityMap &exact);

/// `<bitstring>\t<count>` lines in key order.
std::string histogram_to_tsv(const Histogram &counts);

}  // namespace kdsim

#endif
