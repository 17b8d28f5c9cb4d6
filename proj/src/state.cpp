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

#include "gbit/state.hpp"

#include <cmath>

#include "gbit/algebra.hpp"

namespace gbit {

namespace {
// Slack for round-off on the catalogue box constraints; values within it are
// clamped, values beyond it rejected.
constexpr double kBoxTol = 1e-9;
}  // namespace

BlochState::BlochState(SystemKind system, Eigen::VectorXd yes, double presence)
    : sys(system), y(std::move(yes)), p(presence) {
  if (y.size() != sys.complete_set_size()) {
    throw InvalidStateError("state vector has " + std::to_string(y.size()) +
                            " entries, complete set has " +
                            std::to_string(sys.complete_set_size()));
  }
  if (p < -kBoxTol || p > 1.0 + kBoxTol) {
    throw InvalidStateError("presence probability " + std::to_string(p) + " outside [0,1]");
  }
  p = std::min(1.0, std::max(0.0, p));
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    if (y[i] < -kBoxTol || y[i] > p + kBoxTol) {
      throw InvalidStateError("y[" + std::to_string(i) + "] = " + std::to_string(y[i]) +
                              " outside [0, p]");
    }
    y[i] = std::min(p, std::max(0.0, y[i]));
  }
}

BlochState BlochState::no_information(const SystemKind& sys, double presence) {
  return BlochState(sys, Eigen::VectorXd::Constant(sys.complete_set_size(), presence / 2),
                    presence);
}

Eigen::VectorXd BlochState::bloch_vector() const {
  return 2.0 * y - Eigen::VectorXd::Constant(y.size(), p);
}

double BlochState::yes_probability(const QuestionIndex& q) const {
  return y[complete_set_position(sys, q)];
}

double information_single(double y) {
  if (y < 0.0 || y > 1.0) {
    throw Error("information_single: probability " + std::to_string(y) + " outside [0,1]");
  }
  const double r = 2.0 * y - 1.0;
  return r * r;
}

double information_total(const BlochState& state) {
  return state.bloch_vector().squaredNorm();
}

InfoClassification classify(const BlochState& state) {
  if (std::abs(state.p - 1.0) > 1e-9) {
    throw Error("classify: defined for p = 1 states");
  }
  const double info = information_total(state);
  const double max_info = static_cast<double>((std::int64_t(1) << state.sys.n) - 1);
  if (info > max_info + 1e-6) {
    throw InvalidStateError("information " + std::to_string(info) +
                            " exceeds the maximum of " + std::to_string(max_info) + " bits");
  }
  if (std::abs(info - max_info) <= 1e-9) return InfoClassification::Pure;
  if (info <= 1e-9) return InfoClassification::TotallyMixed;
  return InfoClassification::Mixed;
}

std::string to_string(InfoClassification c) {
  switch (c) {
    case InfoClassification::Pure: return "pure";
    case InfoClassification::Mixed: return "mixed";
    default: return "totally-mixed";
  }
}

BlochState convex_mix(double lambda, const BlochState& s1, const BlochState& s2) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw Error("convex_mix: lambda " + std::to_string(lambda) + " outside [0,1]");
  }
  if (!(s1.sys == s2.sys)) throw Error("convex_mix: mismatched systems");
  return BlochState(s1.sys, lambda * s1.y + (1.0 - lambda) * s2.y,
                    lambda * s1.p + (1.0 - lambda) * s2.p);
}

}  // namespace gbit
