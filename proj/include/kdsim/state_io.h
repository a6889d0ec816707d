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

#ifndef KDSIM_STATE_IO_H
#define KDSIM_STATE_IO_H

#include <string>

#include "json.hpp"
#include "kdsim/kd.h"
#include "kdsim/states.h"

namespace kdsim {

/// Reads { "n": int, "re": [[...]], "im": [[...]] }; a missing "im" means a
/// real matrix. Throws std::invalid_argument on malformed input.
DensityMatrix density_matrix_from_json(const nlohmann::json &j);
DensityMatrix load_density_matrix(const std::string &path);

nlohmann::json to_json(const DensityMatrix &rho);
/// Rows indexed by g, columns by chi.
nlohmann::json to_json(const KDDistribution &q);

}  // namespace kdsim

#endif
