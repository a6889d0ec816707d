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

#include "kdsim/phase_space_sim.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <thread>

#include "kdsim/states.h"

namespace kdsim {

std::string ShotRecord::str() const {
    std::string s(bits.size(), '0');
    for (size_t k = 0; k < bits.size(); k++) {
        s[k] = bits[k] ? '1' : '0';
    }
    return s;
}

namespace {

std::string describe(const KDViolation &v) {
    std::ostringstream out;
    out.precision(6);
    out << "input is not KD-positive: worst entry Q[g=" << v.where.g.str() << "][chi=" << v.where.chi.str()
        << "] = " << v.value.real() << (v.value.imag() < 0 ? " - " : " + ") << std::abs(v.value.imag()) << "i";
    return out.str();
}

}  // namespace

KdNonpositiveError::KdNonpositiveError(KDViolation violation)
    : std::runtime_error(describe(violation)), violation_(std::move(violation)) {
}

// ---------------------------------------------------------------------------
// CSS specs.

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    size_t start = 0;
    while (true) {
        size_t end = text.find(sep, start);
        parts.push_back(text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
        if (end == std::string_view::npos) {
            return parts;
        }
        start = end + 1;
    }
}

}  // namespace

CssSpec CssSpec::parse(std::string_view text) {
    constexpr std::string_view prefix = "css:";
    if (text.substr(0, prefix.size()) != prefix) {
        throw std::invalid_argument("CSS state name must start with 'css:'");
    }
    std::string_view gens_text, g_text, x_text;
    bool have_h = false, have_g = false, have_x = false;
    for (auto field : split(text.substr(prefix.size()), ';')) {
        if (field.substr(0, 2) == "H=") {
            gens_text = field.substr(2);
            have_h = true;
        } else if (field.substr(0, 2) == "g=") {
            g_text = field.substr(2);
            have_g = true;
        } else if (field.substr(0, 2) == "x=") {
            x_text = field.substr(2);
            have_x = true;
        } else {
            throw std::invalid_argument("unknown CSS field '" + std::string(field) + "'");
        }
    }
    if (!have_h || !have_g || !have_x) {
        throw std::invalid_argument("CSS state name needs H=, g= and x= fields");
    }
    CssSpec spec;
    spec.g = BitVector::parse(g_text);
    spec.chi = BitVector::parse(x_text);
    spec.n = spec.g.size();
    if (spec.n < 1 || spec.chi.size() != spec.n) {
        throw std::invalid_argument("CSS g and x must be nonempty and of equal length");
    }
    if (!gens_text.empty()) {
        for (auto part : split(gens_text, ',')) {
            BitVector gen = BitVector::parse(part);
            if (gen.size() != spec.n) {
                throw std::invalid_argument("CSS generator '" + std::string(part) + "' has wrong length");
            }
            spec.generators.push_back(gen);
        }
    }
    return spec;
}

std::string CssSpec::str() const {
    std::string s = "css:H=";
    for (size_t k = 0; k < generators.size(); k++) {
        s += (k ? "," : "") + generators[k].str();
    }
    return s + ";g=" + g.str() + ";x=" + chi.str();
}

PureState CssSpec::state() const {
    check_dense_qubits(n);
    return css_state(Subgroup::span(n, generators), g, chi);
}

namespace {

bool is_coset_minimum(const BitVector &x, const std::vector<BitVector> &members) {
    for (const auto &h : members) {
        if (x + h < x) {
            return false;
        }
    }
    return true;
}

}  // namespace

std::vector<CssSpec> enumerate_css_specs(int n) {
    std::vector<CssSpec> specs;
    uint64_t d = uint64_t{1} << n;
    for (const auto &h : enumerate_subgroups(n)) {
        auto perp = h.perp_members();
        for (uint64_t gi = 0; gi < d; gi++) {
            BitVector g = BitVector::from_index(gi, n);
            if (!is_coset_minimum(g, h.members())) {
                continue;
            }
            for (uint64_t ci = 0; ci < d; ci++) {
                BitVector chi = BitVector::from_index(ci, n);
                if (is_coset_minimum(chi, perp)) {
                    specs.push_back({n, h.generators(), g, chi});
                }
            }
        }
    }
    return specs;
}

// ---------------------------------------------------------------------------
// Sampling.

PhasePointSampler PhasePointSampler::from_table(const KDDistribution &q, double tol) {
    KDViolation worst = worst_violation(q);
    if (worst.amount > tol) {
        throw KdNonpositiveError(worst);
    }
    PhasePointSampler sampler;
    sampler.n_ = q.n;
    Eigen::Index d = q.table.rows();
    sampler.cdf_.resize(static_cast<size_t>(d * d));
    double running = 0;
    for (Eigen::Index g = 0; g < d; g++) {
        for (Eigen::Index chi = 0; chi < d; chi++) {
            running += std::max(0.0, q.table(g, chi).real());
            sampler.cdf_[static_cast<size_t>(g * d + chi)] = running;
        }
    }
    if (!(running > 0)) {
        throw std::invalid_argument("KD table has no positive mass");
    }
    for (double &c : sampler.cdf_) {
        c /= running;
    }
    return sampler;
}

PhasePointSampler PhasePointSampler::from_css(const CssSpec &spec) {
    PhasePointSampler sampler;
    sampler.n_ = spec.n;
    sampler.css_g_ = spec.g;
    sampler.css_chi_ = spec.chi;
    // Independent generators make a uniform subset sum uniform over H.
    std::vector<BitVector> echelon;
    std::vector<int> pivots;
    for (const auto &gen : spec.generators) {
        BitVector row = gen;
        for (size_t r = 0; r < echelon.size(); r++) {
            if (row.get(pivots[r])) {
                row += echelon[r];
            }
        }
        if (row.is_zero()) {
            continue;
        }
        int pivot = 0;
        while (!row.get(pivot)) {
            pivot++;
        }
        echelon.push_back(row);
        pivots.push_back(pivot);
        sampler.h_basis_.push_back(gen);
    }
    sampler.perp_basis_ = orthogonal_complement_basis(spec.n, spec.generators);
    return sampler;
}

PhasePoint PhasePointSampler::sample(CounterRng &rng) const {
    if (!cdf_.empty()) {
        double u = rng.uniform();
        size_t k = static_cast<size_t>(std::upper_bound(cdf_.begin(), cdf_.end(), u) - cdf_.begin());
        k = std::min(k, cdf_.size() - 1);
        uint64_t d = uint64_t{1} << n_;
        return {BitVector::from_index(k / d, n_), BitVector::from_index(k % d, n_)};
    }
    PhasePoint p{css_g_, css_chi_};
    for (const auto &h : h_basis_) {
        if (rng.coin()) {
            p.g += h;
        }
    }
    for (const auto &e : perp_basis_) {
        if (rng.coin()) {
            p.chi += e;
        }
    }
    return p;
}

PhasePoint sample_phase_point(const KDDistribution &q, CounterRng &rng, double tol) {
    return PhasePointSampler::from_table(q, tol).sample(rng);
}

// ---------------------------------------------------------------------------
// Trajectories.

ShotRecord run_trajectory(const Circuit &circuit, const PhasePointSampler &input, CounterRng &rng) {
    if (input.n() != circuit.n) {
        throw std::invalid_argument("input state has " + std::to_string(input.n()) + " qubits, circuit has " +
                                    std::to_string(circuit.n));
    }
    PhasePoint point = input.sample(rng);
    ShotRecord record;
    for (const Gate &gate : circuit.gates) {
        switch (gate.kind) {
            case GateKind::Pauli:
                point.g += gate.pauli.u;
                point.chi += gate.pauli.v;
                break;
            case GateKind::ConditionalPauli: {
                int parity = 0;
                for (int idx : gate.condition) {
                    parity ^= record.bits.at(idx);
                }
                if (parity) {
                    point.g += gate.pauli.u;
                    point.chi += gate.pauli.v;
                }
                break;
            }
            case GateKind::HadamardAll:
                std::swap(point.g, point.chi);
                break;
            case GateKind::Cnot: {
                CnotMaps maps(gate.control, gate.target, circuit.n);
                point.g = maps.map_group(point.g);
                point.chi = maps.map_character(point.chi);
                break;
            }
            case GateKind::Measure:
                record.bits.push_back(point.g.get(gate.qubit) ? 1 : 0);
                if (rng.coin()) {
                    point.chi.flip(gate.qubit);
                }
                break;
        }
    }
    return record;
}

Histogram run_shots(const Circuit &circuit, const PhasePointSampler &input, uint64_t shots, uint64_t seed,
                    int workers) {
    circuit.validate();
    workers = std::max(1, workers);
    std::vector<Histogram> partial(static_cast<size_t>(workers));
    auto work = [&](int w) {
        uint64_t begin = shots * static_cast<uint64_t>(w) / static_cast<uint64_t>(workers);
        uint64_t end = shots * static_cast<uint64_t>(w + 1) / static_cast<uint64_t>(workers);
        for (uint64_t i = begin; i < end; i++) {
            CounterRng rng(seed, i);
            partial[static_cast<size_t>(w)][run_trajectory(circuit, input, rng).str()]++;
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
    Histogram merged;
    for (const auto &h : partial) {
        for (const auto &[key, count] : h) {
            merged[key] += count;
        }
    }
    return merged;
}

Histogram run_shots(const Circuit &circuit, const DensityMatrix &rho, uint64_t shots, uint64_t seed, double tol,
                    int workers) {
    return run_shots(circuit, PhasePointSampler::from_table(kd_distribution(rho, tol), tol), shots, seed, workers);
}

double total_variation_distance(const Histogram &counts, const ProbabilityMap &exact) {
    uint64_t total = 0;
    for (const auto &[key, count] : counts) {
        total += count;
    }
    std::set<std::string> keys;
    for (const auto &[key, count] : counts) {
        keys.insert(key);
    }
    for (const auto &[key, p] : exact) {
        keys.insert(key);
    }
    double distance = 0;
    for (const auto &key : keys) {
        auto c = counts.find(key);
        auto e = exact.find(key);
        double empirical = c == counts.end() || total == 0 ? 0.0 : static_cast<double>(c->second) / total;
        double expected = e == exact.end() ? 0.0 : e->second;
        distance += std::abs(empirical - expected);
    }
    return distance / 2;
}

std::string histogram_to_tsv(const Histogram &counts) {
    std::ostringstream out;
    for (const auto &[key, count] : counts) {
        out << key << "\t" << count << "\n";
    }
    return out.str();
}

}  // namespace kdsim
