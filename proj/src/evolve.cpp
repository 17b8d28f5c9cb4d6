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

#include "gbit/evolve.hpp"

#include <cmath>
#include <complex>

#include "gbit/algebra.hpp"
#include "gbit/oracle.hpp"

namespace gbit {

namespace {
constexpr double kSymmetryTol = 1e-12;

double scale_of(const Eigen::MatrixXd& m) { return std::max(1.0, m.cwiseAbs().maxCoeff()); }
double scale_of(const Eigen::MatrixXcd& m) { return std::max(1.0, m.cwiseAbs().maxCoeff()); }
}  // namespace

LandscapeGenerator::LandscapeGenerator(Eigen::MatrixXd generator) : g(std::move(generator)) {
  if (g.rows() != g.cols()) throw Error("landscape generator must be square");
  if ((g + g.transpose()).cwiseAbs().maxCoeff() > kSymmetryTol * scale_of(g)) {
    throw Error("landscape generator is not antisymmetric");
  }
  g = ((g - g.transpose()) / 2.0).eval();
}

QuantumGenerator::QuantumGenerator(Eigen::MatrixXcd hamiltonian) : h(std::move(hamiltonian)) {
  if (h.rows() != h.cols()) throw Error("Hamiltonian must be square");
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > kSymmetryTol * scale_of(h)) {
    throw Error("Hamiltonian is not Hermitian");
  }
  h = ((h + h.adjoint().eval()) / 2.0).eval();
  const std::complex<double> shift = h.trace() / static_cast<double>(h.rows());
  h -= shift * Eigen::MatrixXcd::Identity(h.rows(), h.cols());
}

Eigen::MatrixXd rotation_exp(const Eigen::MatrixXd& g, double dt) {
  // iG is Hermitian, so exp(dt G) = V exp(-i dt L) V^H with iG = V L V^H.
  const std::complex<double> im(0.0, 1.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(im * g);
  if (solver.info() != Eigen::Success) throw Error("rotation_exp: eigendecomposition failed");
  const Eigen::VectorXd lambda = solver.eigenvalues();
  Eigen::VectorXcd phases(lambda.size());
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    phases[i] = std::exp(-im * dt * lambda[i]);
  }
  const Eigen::MatrixXcd result =
      solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
  if (result.imag().cwiseAbs().maxCoeff() > 1e-10) {
    throw Error("rotation_exp: non-real rotation matrix");
  }
  return result.real();
}

Eigen::MatrixXcd unitary_exp(const Eigen::MatrixXcd& h, double dt) {
  const std::complex<double> im(0.0, 1.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  if (solver.info() != Eigen::Success) throw Error("unitary_exp: eigendecomposition failed");
  const Eigen::VectorXd lambda = solver.eigenvalues();
  Eigen::VectorXcd phases(lambda.size());
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    phases[i] = std::exp(-im * dt * lambda[i]);
  }
  return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

BlochState evolve(const BlochState& state, const LandscapeGenerator& gen, double dt) {
  if (gen.g.rows() != state.dim()) {
    throw Error("landscape generator dimension " + std::to_string(gen.g.rows()) +
                " does not match state dimension " + std::to_string(state.dim()));
  }
  const Eigen::VectorXd rotated = rotation_exp(gen.g, dt) * state.bloch_vector();
  Eigen::VectorXd y = ((rotated.array() + state.p) / 2.0).matrix();
  // A rotation may carry a high-information catalogue out of the probability
  // box; such an image is not a catalogue of yes-probabilities at all.
  return BlochState(state.sys, std::move(y), state.p);
}

BlochState evolve(const BlochState& state, const QuantumGenerator& gen, double dt) {
  if (gen.h.rows() != state.sys.dim()) {
    throw Error("Hamiltonian dimension " + std::to_string(gen.h.rows()) +
                " does not match Hilbert dimension " + std::to_string(state.sys.dim()));
  }
  if (state.sys.kind == GbitKind::Rebit &&
      gen.h.real().cwiseAbs().maxCoeff() > kSymmetryTol * scale_of(gen.h)) {
    throw Error("rebit evolution needs a purely imaginary Hamiltonian (real orthogonal U)");
  }
  const Eigen::MatrixXcd u = unitary_exp(gen.h, dt);
  const DensityMatrix rho = bloch_to_density(state);
  DensityMatrix evolved = u * rho * u.adjoint();
  evolved = (evolved + evolved.adjoint().eval()) / 2.0;
  return density_to_bloch(state.sys, evolved);
}

BlochState evolve(const BlochState& state, const EvolutionGenerator& gen, double dt) {
  return std::visit([&](const auto& g) { return evolve(state, g, dt); }, gen);
}

Eigen::MatrixXd induced_bloch_map(const SystemKind& sys, const Eigen::MatrixXcd& u) {
  const auto set = enumerate_complete_set(sys);
  const double norm = 1.0 / static_cast<double>(sys.dim());
  std::vector<Eigen::MatrixXcd> ops;
  ops.reserve(set.members.size());
  for (const auto& q : set.members) ops.push_back(to_complex(cached_matrix_of(sys, q).matrix));

  Eigen::MatrixXd t(set.size(), set.size());
  for (std::int64_t j = 0; j < set.size(); ++j) {
    const Eigen::MatrixXcd conjugated = u * ops[j] * u.adjoint();
    for (std::int64_t i = 0; i < set.size(); ++i) {
      t(i, j) = norm * (ops[i] * conjugated).trace().real();
    }
  }
  return t;
}

}  // namespace gbit
