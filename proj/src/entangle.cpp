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

#include "gbit/entangle.hpp"

#include "gbit/algebra.hpp"

namespace gbit {

namespace {

bool straddles(const QuestionIndex& q, std::uint64_t side_a) {
  bool on_a = false, on_b = false;
  for (int site = 0; site < q.n(); ++site) {
    if (q[site] == 0) continue;
    ((side_a >> site) & 1 ? on_a : on_b) = true;
  }
  return on_a && on_b;
}

double alpha(const BlochState& state, std::int64_t position) {
  const double r = 2.0 * state.y[position] - state.p;
  return r * r;
}

}  // namespace

double composite_information(const BlochState& state, std::uint64_t side_a) {
  const int n = state.sys.n;
  const std::uint64_t all = (std::uint64_t(1) << n) - 1;
  side_a &= all;
  if (side_a == 0 || side_a == all) {
    throw Error("composite_information: bipartition must split the gbits");
  }
  const auto set = enumerate_complete_set(state.sys);
  double total = 0.0;
  for (std::int64_t i = 0; i < set.size(); ++i) {
    if (straddles(set.members[i], side_a)) total += alpha(state, i);
  }
  return total;
}

EntanglementClass entanglement_class(const BlochState& state, std::uint64_t side_a) {
  return composite_information(state, side_a) > 1.0 + 1e-9
             ? EntanglementClass::Entangled
             : EntanglementClass::ClassicallyComposed;
}

Tangles tangles(const BlochState& state) {
  if (state.sys.n != 3) throw Error("tangles: defined for three-gbit states");
  const auto set = enumerate_complete_set(state.sys);
  Tangles out;
  for (std::int64_t i = 0; i < set.size(); ++i) {
    const QuestionIndex& q = set.members[i];
    const bool a = q[0] != 0, b = q[1] != 0, c = q[2] != 0;
    const double value = alpha(state, i);
    if (a && b && c) {
      out.three_tangle += value;
    } else if (a && b) {
      out.tau_ab += value;
    } else if (a && c) {
      out.tau_ac += value;
    }
  }
  out.tau_a_bc = out.three_tangle + out.tau_ab + out.tau_ac;
  return out;
}

}  // namespace gbit
