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

#include <cstdint>

#include "gbit/state.hpp"

namespace gbit {

enum class EntanglementClass { Entangled, ClassicallyComposed };

/// Sum of single-question informations over all questions straddling the
/// bipartition (non-zero support on both sides). `side_a` is a bitmask over
/// gbit sites; both sides must be non-empty.
double composite_information(const BlochState& state, std::uint64_t side_a);

/// Entangled iff the composite information across the bipartition exceeds
/// 1 bit (with a 1e-9 guard); at most 1 bit of cross information is
/// attainable classically.
EntanglementClass entanglement_class(const BlochState& state, std::uint64_t side_a);

/// Informational tangles of a three-gbit state. tau_a_bc collects all
/// tripartite information plus the A-B and A-C bipartite information;
/// the three-tangle is the tripartite sum alone, so the monogamy inequality
/// tau_a_bc >= tau_ab + tau_ac holds with slack exactly equal to the
/// three-tangle.
struct Tangles {
  double tau_a_bc = 0.0;
  double tau_ab = 0.0;
  double tau_ac = 0.0;
  double three_tangle = 0.0;
};

Tangles tangles(const BlochState& state);

}  // namespace gbit
