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

#include <Eigen/Dense>
#include <variant>

#include "gbit/state.hpp"
#include "gbit/types.hpp"

namespace gbit {

/// Generates a one-parameter subgroup of SO(D) acting directly on the Bloch
/// vector: r(dt) = exp(dt G) r(0). Any such rotation conserves the squared
/// Bloch length, but for n >= 2 not every rotation maps quantum-valid states
/// to quantum-valid states.
struct LandscapeGenerator {
  Eigen::MatrixXd g;

  explicit LandscapeGenerator(Eigen::MatrixXd generator);
};

/// Conjugation rho -> U rho U^H with U = exp(-i H dt). The induced Bloch
/// map is orthogonal and maps valid states to valid states. For rebit
/// systems H must be purely imaginary (U real orthogonal) so the state stays
/// in the real-symmetric span.
struct QuantumGenerator {
  Eigen::MatrixXcd h;  // Hermitian, canonicalized to traceless

  explicit QuantumGenerator(Eigen::MatrixXcd hamiltonian);
};

using EvolutionGenerator = std::variant<LandscapeGenerator, QuantumGenerator>;

/// exp(dt G) by eigendecomposition of the Hermitian matrix iG.
Eigen::MatrixXd rotation_exp(const Eigen::MatrixXd& g, double dt);

/// U = exp(-i H dt) by Hermitian eigendecomposition.
Eigen::MatrixXcd unitary_exp(const Eigen::MatrixXcd& h, double dt);

BlochState evolve(const BlochState& state, const LandscapeGenerator& gen, double dt);
BlochState evolve(const BlochState& state, const QuantumGenerator& gen, double dt);
BlochState evolve(const BlochState& state, const EvolutionGenerator& gen, double dt);

/// The D x D linear map induced on Bloch vectors by conjugation with U:
/// T_ij = 2^-n tr(P_i U P_j U^H). Orthogonal for any unitary U.
Eigen::MatrixXd induced_bloch_map(const SystemKind& sys, const Eigen::MatrixXcd& u);

}  // namespace gbit
