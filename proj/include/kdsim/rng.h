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

#ifndef KDSIM_RNG_H
#define KDSIM_RNG_H

#include <array>
#include <cstdint>

namespace kdsim {

/// Philox4x32-10 block function (Salmon et al., SC'11).
std::array<uint32_t, 4> philox4x32(std::array<uint32_t, 4> counter, std::array<uint32_t, 2> key);

/// Counter-based random stream keyed by (seed, stream).
///
/// Stream `i` of seed `s` is the same sequence no matter which thread or
/// chunk draws it, so per-sample or per-trajectory streams give results
/// that do not depend on scheduling.
class CounterRng {
   public:
    CounterRng(uint64_t seed, uint64_t stream);

    uint32_t next_u32();
    uint64_t next_u64();
    /// Uniform in [0, 1) with 53 random bits.
    double uniform();
    /// Standard normal by the Box-Muller transform.
    double normal();
    bool coin() { return (next_u32() & 1u) != 0; }
    /// Uniform integer in [0, bound); bound must be positive.
    uint64_t below(uint64_t bound);

   private:
    void refill();

    std::array<uint32_t, 2> key_;
    uint64_t stream_;
    uint64_t block_ = 0;
    std::array<uint32_t, 4> buffer_{};
    int pos_ = 4;
    bool has_spare_normal_ = false;
    double spare_normal_ = 0;
};

}  // namespace kdsim

#endif
