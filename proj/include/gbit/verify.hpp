// Copyright 2026 gbit-toolbox authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gbit/types.hpp"

namespace gbit {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Cross-validation of the symbolic rules against the matrix oracle plus the
/// structural invariants of every module: counting formulas, compatibility
/// vs commutation (exhaustive up to n_exhaustive, sampled above), composition
/// signs, associativity, lattice degrees, GF(2) solver vs brute force,
/// handedness, information measure, evolution conservation, entanglement and
/// monogamy structure. `kind` empty runs both kinds.
std::vector<CheckResult> run_verification(std::optional<GbitKind> kind, int n_exhaustive,
                                          std::uint64_t seed);

}  // namespace gbit
