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

#include <doctest.h>

#include <cmath>

#include "gbit/evolve.hpp"
#include "gbit/oracle.hpp"
#include "gbit/rng.hpp"

using namespace gbit;

namespace {
const SystemKind kQubit1{GbitKind::Qubit, 1};
const SystemKind kQubit2{GbitKind::Qubit, 2};
const SystemKind kRebit1{GbitKind::Rebit, 1};

QuantumGenerator sigma_z_half() {
  Eigen::MatrixXcd h(2, 2);
  h << 0.5, 0.0, 0.0, -0.5;
  return QuantumGenerator(h);
}
}  // namespace

TEST_CASE("generator validation") {
  Eigen::MatrixXd not_antisym(2, 2);
  not_antisym << 0.0, 1.0, 1.0, 0.0;
  CHECK_THROWS_AS((LandscapeGenerator{not_antisym}), Error);

  Eigen::MatrixXcd not_hermitian(2, 2);
  not_hermitian << 0.0, 1.0, 2.0, 0.0;
  CHECK_THROWS_AS((QuantumGenerator{not_hermitian}), Error);

  // The trace part acts trivially and is canonicalized away.
  Eigen::MatrixXcd shifted(2, 2);
  shifted << 3.5, 0.0, 0.0, 2.5;
  const QuantumGenerator gen(shifted);
  CHECK(std::abs(gen.h.trace()) < 1e-12);
}

TEST_CASE("zero duration is the identity") {
  Eigen::VectorXd y(3);
  y << 0.8, 0.4, 0.5;
  const BlochState state(kQubit1, y);
  const BlochState same = evolve(state, sigma_z_half(), 0.0);
  CHECK((same.y - state.y).cwiseAbs().maxCoeff() < 1e-12);

  Eigen::MatrixXd g(3, 3);
  g << 0, -1, 0, 1, 0, 0, 0, 0, 0;
  const BlochState also_same = evolve(state, LandscapeGenerator(g), 0.0);
  CHECK((also_same.y - state.y).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("precession about z follows the closed form") {
  // x-polarized state under H = sigma_z / 2: r(t) = (cos t, sin t, 0).
  Eigen::VectorXd y(3);
  y << 1.0, 0.5, 0.5;
  const BlochState start(kQubit1, y);
  const QuantumGenerator gen = sigma_z_half();

  for (const double t : {0.3, 1.0, M_PI / 2, 2.1, M_PI}) {
    const BlochState moved = evolve(start, gen, t);
    CHECK(moved.y[0] == doctest::Approx((1.0 + std::cos(t)) / 2.0).epsilon(1e-10));
    CHECK(moved.y[1] == doctest::Approx((1.0 + std::sin(t)) / 2.0).epsilon(1e-10));
    CHECK(moved.y[2] == doctest::Approx(0.5).epsilon(1e-10));
  }
  // The half turn flips the x answer exactly.
  const BlochState flipped = evolve(start, gen, M_PI);
  CHECK(flipped.y[0] == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("landscape rotation follows the closed form") {
  // 2x2 rotation generator on the rebit disc.
  Eigen::MatrixXd g(2, 2);
  g << 0.0, -1.0, 1.0, 0.0;
  Eigen::VectorXd y(2);
  y << 0.9, 0.5;  // r = (0.8, 0)
  const BlochState start(kRebit1, y);
  for (const double t : {0.2, 1.3, M_PI}) {
    const BlochState moved = evolve(start, LandscapeGenerator(g), t);
    CHECK(moved.y[0] == doctest::Approx((1.0 + 0.8 * std::cos(t)) / 2.0).epsilon(1e-10));
    CHECK(moved.y[1] == doctest::Approx((1.0 + 0.8 * std::sin(t)) / 2.0).epsilon(1e-10));
  }
}

TEST_CASE("group law and conservation") {
  std::mt19937_64 eng = stream_for(31, 0);
  const BlochState state = density_to_bloch(kQubit2, random_density(eng, 4));

  Eigen::MatrixXcd h(4, 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) h(i, j) = std::complex<double>(normal01(eng), normal01(eng));
  }
  const QuantumGenerator gen(((h + h.adjoint().eval()) / 2.0).eval());

  const double t1 = 0.7, t2 = -1.9;
  const BlochState two_step = evolve(evolve(state, gen, t1), gen, t2);
  const BlochState one_step = evolve(state, gen, t1 + t2);
  CHECK((two_step.y - one_step.y).cwiseAbs().maxCoeff() < 1e-9);
  CHECK(std::abs(information_total(two_step) - information_total(state)) < 1e-9);
}

TEST_CASE("quantum evolution preserves validity, landscape may not") {
  // A pure two-qubit state has Bloch length sqrt(3) > 1; a generic rotation
  // moves it outside the probability box while the unitary route stays valid.
  DensityMatrix rho = DensityMatrix::Identity(4, 4) / 4.0;
  rho = lueders_update(kQubit2, rho, QuestionIndex({1, 1}), true);
  rho = lueders_update(kQubit2, rho, QuestionIndex({2, 2}), true);
  const BlochState bell = density_to_bloch(kQubit2, rho);

  // Rotate the 11 component into the 10 slot: the image would need
  // y(10) = (1 + sqrt(3) * ... ) -- already a single transposition suffices.
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(15, 15);
  g(3, 4) = -1.0;  // couples the 10 and 11 axes
  g(4, 3) = 1.0;
  bool left_box = false;
  try {
    // Rotating the full bit from 11 onto 10 keeps |r_i| <= 1 here, so rotate
    // only part way through a state with two full components instead.
    Eigen::MatrixXd g2 = Eigen::MatrixXd::Zero(15, 15);
    g2(4, 9) = -1.0;  // mixes the 11 and 22 axes
    g2(9, 4) = 1.0;
    const BlochState moved = evolve(bell, LandscapeGenerator(g2), M_PI / 4);
    (void)moved;
  } catch (const InvalidStateError&) {
    left_box = true;
  }
  CHECK(left_box);  // r(11) and r(22) combine to sqrt(2) > 1 under a 45-degree mix

  const BlochState rotated = evolve(bell, LandscapeGenerator(g), M_PI / 2);
  CHECK(std::abs(information_total(rotated) - 3.0) < 1e-9);
  // The image is a legal catalogue but not a quantum state: the rotation took
  // the Bloch body outside the positive-semidefinite set.
  CHECK_FALSE(is_positive_semidefinite(bloch_to_density(rotated)));

  // The unitary route always lands on a valid state.
  std::mt19937_64 eng = stream_for(31, 5);
  Eigen::MatrixXcd h(4, 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) h(i, j) = std::complex<double>(normal01(eng), normal01(eng));
  }
  const BlochState evolved = evolve(bell, QuantumGenerator(((h + h.adjoint().eval()) / 2.0).eval()), 1.7);
  CHECK(is_positive_semidefinite(bloch_to_density(evolved)));
  CHECK(std::abs(information_total(evolved) - 3.0) < 1e-9);
}

TEST_CASE("rebit evolution stays in the real span") {
  Eigen::MatrixXd a(4, 4);
  std::mt19937_64 eng = stream_for(41, 0);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) a(i, j) = normal01(eng);
  }
  const Eigen::MatrixXcd h =
      std::complex<double>(0, 1) * (a - a.transpose()).eval().cast<std::complex<double>>();
  const SystemKind rebit2{GbitKind::Rebit, 2};
  const BlochState state = density_to_bloch(rebit2, random_density(eng, 4, true));
  const BlochState moved = evolve(state, QuantumGenerator(h), 0.9);
  CHECK(std::abs(information_total(moved) - information_total(state)) < 1e-9);

  // A complex Hamiltonian would leave the rebit span.
  Eigen::MatrixXcd bad(4, 4);
  bad.setZero();
  bad(0, 0) = 1.0;
  bad(1, 1) = -1.0;
  CHECK_THROWS_AS(evolve(state, QuantumGenerator(bad), 0.5), Error);
}

TEST_CASE("dimension mismatches are rejected") {
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(3, 3);
  CHECK_THROWS_AS(evolve(BlochState::no_information(kQubit2), LandscapeGenerator(g), 1.0),
                  Error);
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(2, 2);
  CHECK_THROWS_AS(evolve(BlochState::no_information(kQubit2), QuantumGenerator(h), 1.0),
                  Error);
}

TEST_CASE("variant generator dispatch") {
  Eigen::VectorXd y(3);
  y << 1.0, 0.5, 0.5;
  const BlochState state(kQubit1, y);
  const EvolutionGenerator gen = sigma_z_half();
  const BlochState moved = evolve(state, gen, M_PI);
  CHECK(moved.y[0] == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("induced bloch map is orthogonal") {
  std::mt19937_64 eng = stream_for(51, 0);
  Eigen::MatrixXcd h(4, 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) h(i, j) = std::complex<double>(normal01(eng), normal01(eng));
  }
  const QuantumGenerator gen(((h + h.adjoint().eval()) / 2.0).eval());
  const Eigen::MatrixXd t = induced_bloch_map(kQubit2, unitary_exp(gen.h, 0.83));
  CHECK((t.transpose() * t - Eigen::MatrixXd::Identity(15, 15)).cwiseAbs().maxCoeff() < 1e-8);
}
