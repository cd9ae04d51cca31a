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

#ifndef PCEST_EXECUTION_H
#define PCEST_EXECUTION_H

namespace pcest {

/// How data-parallel kernels run. Serial is the reference path kept for
/// testing; both produce bit-identical results.
enum class Execution {
    Serial,
    Parallel,
};

/// Sets the OpenMP worker count for subsequent Parallel kernels (<= 0 leaves it unchanged).
void set_worker_count(int workers);
int worker_count();

}  // namespace pcest

#endif
