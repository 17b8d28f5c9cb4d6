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

#include <map>
#include <utility>
#include <vector>

#include "gbit/types.hpp"

namespace gbit {

/// One linear constraint over GF(2): the XOR of the listed variables equals
/// rhs. An XNOR relation a <-> b = 1 is the constraint a ^ b = 0.
struct Gf2Constraint {
  std::vector<int> vars;
  int rhs = 0;
};

struct FrustrationOutcome {
  bool satisfiable = false;
  /// One satisfying assignment (free variables set to 0) when satisfiable.
  std::vector<std::uint8_t> witness;
  /// Indices of an inconsistent subset of the input constraints whose XOR
  /// reduces to 0 = 1, when frustrated.
  std::vector<int> inconsistent;
};

/// Decides a system of XOR/XNOR constraints by Gaussian elimination over
/// GF(2). Returns a witness assignment or an inconsistent certificate subset.
/// Throws Error for out-of-range variable ids or rhs outside {0,1}.
FrustrationOutcome frustration_check(int num_vars, const std::vector<Gf2Constraint>& constraints);

/// A constraint phrased over questions: the XNOR chain of `questions`
/// evaluates to `value`. Expanded over per-gbit truth variables this becomes
/// a single Gf2Constraint; the expansion is the local (classical) reading of
/// the correlation and is what a hidden-variable model would have to satisfy.
struct QuestionConstraint {
  std::vector<QuestionIndex> questions;
  bool value = true;
};

/// Expands question-level constraints over individual variables
/// x(site, index) with variable id site*3 + index - 1. Returns the variable
/// count and the expanded system. Entries repeated an even number of times
/// cancel, as GF(2) demands.
std::pair<int, std::vector<Gf2Constraint>> individuals_encoding(
    const SystemKind& sys, const std::vector<QuestionConstraint>& constraints);

enum class Parity { Even, Odd };

/// Checks a distribution of even/odd correlation parities over the gbit
/// pairs, keyed by pairs (a, b) with a < b over gbits 0..num_gbits-1. The
/// distribution is consistent iff every gbit triple carries an odd number of
/// odd parities; equivalently, iff it is induced by some per-gbit handedness
/// assignment. Throws Error when a pair is missing.
bool handedness_consistency(int num_gbits,
                            const std::map<std::pair<int, int>, Parity>& pair_parities);

}  // namespace gbit
