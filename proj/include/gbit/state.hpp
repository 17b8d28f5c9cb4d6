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

#include "gbit/types.hpp"

namespace gbit {

/// The observer's catalogue of knowledge: yes-probabilities over the
/// lexicographically ordered complete question set, plus the presence
/// probability p. Invariant 0 <= y_i <= p (the no-probability is p - y_i).
struct BlochState {
  SystemKind sys;
  Eigen::VectorXd y;
  double p = 1.0;

  BlochState() = default;
  BlochState(SystemKind system, Eigen::VectorXd yes, double presence = 1.0);

  /// The state of no information: y_i = p/2 everywhere.
  static BlochState no_information(const SystemKind& sys, double presence = 1.0);

  Eigen::Index dim() const { return y.size(); }

  /// Generalized Bloch vector r = 2y - p 1. Its squared length is the total
  /// information in bits.
  Eigen::VectorXd bloch_vector() const;

  /// Component lookup by question.
  double yes_probability(const QuestionIndex& q) const;
};

/// Information carried by a single yes-probability (p = 1 convention):
/// (2y - 1)^2. Zero bits at y = 1/2, one bit at y in {0,1}, symmetric and
/// monotone on each half.
double information_single(double y);

/// Squared length of the (p-scaled) Bloch vector, in bits.
double information_total(const BlochState& state);

enum class InfoClassification { Pure, Mixed, TotallyMixed };

/// Classifies by information content for p = 1 states: Pure at 2^n - 1 bits
/// (tolerance 1e-9), TotallyMixed at 0 (tolerance 1e-9), Mixed otherwise.
/// Throws InvalidStateError above 2^n - 1 + 1e-6.
InfoClassification classify(const BlochState& state);

std::string to_string(InfoClassification c);

/// Convex combination of two catalogues, componentwise on y and p.
BlochState convex_mix(double lambda, const BlochState& s1, const BlochState& s2);

}  // namespace gbit
