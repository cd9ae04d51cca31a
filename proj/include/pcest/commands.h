// Copyright 2026 The pcest Authors
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

#ifndef PCEST_COMMANDS_H
#define PCEST_COMMANDS_H

#include <ostream>
#include <string>
#include <vector>

namespace pcest {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidArguments = 2;
inline constexpr int kExitNonIdentifiable = 3;

/// Runs the command-line front end. `out` receives CSV/report output when no
/// --out path is given; `err` receives diagnostics and sweep summaries.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace pcest

#endif
