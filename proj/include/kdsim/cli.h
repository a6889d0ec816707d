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

#ifndef KDSIM_CLI_H
#define KDSIM_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

namespace kdsim {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitInput = 2, kExitNumeric = 3 };

/// Runs the `kdsim` command line. `args` excludes the program name.
/// Machine-readable output goes to `out` (or the --out file), diagnostics to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace kdsim

#endif
