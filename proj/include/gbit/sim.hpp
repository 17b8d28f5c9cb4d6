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
#include <string>
#include <vector>

#include "gbit/oracle.hpp"
#include "gbit/state.hpp"
#include "gbit/types.hpp"

namespace gbit {

/// One observer session: a prepared system interrogated with a fixed script
/// of questions under a fixed seed.
struct Interrogation {
  SystemKind sys;
  DensityMatrix preparation;
  std::vector<QuestionIndex> script;
  std::uint64_t seed = 0;
};

/// Per-question record of a single-shot interrogation.
struct TranscriptEntry {
  QuestionIndex question;
  bool yes = false;
  double pre_probability = 0.0;
  BlochState post;
};

struct Transcript {
  std::uint64_t shot = 0;
  std::vector<TranscriptEntry> entries;
};

/// Interrogates one copy of the preparation: each scripted question is
/// answered with its Born probability and the state collapses by the
/// projective update. Immediately repeated questions repeat their answer.
Transcript run_single_shot(const Interrogation& interrogation, std::uint64_t shot_index = 0);

struct TomographyResult {
  SystemKind sys;
  std::vector<QuestionIndex> questions;
  Eigen::VectorXd y_hat;       // empirical yes-frequencies
  Eigen::VectorXd std_error;   // sqrt(y(1-y)/shots)
  std::int64_t shots_per_question = 0;

  /// Estimate assembled over the complete set (questions outside the probed
  /// list stay at 1/2). Only meaningful when the full set was probed.
  BlochState estimate() const;
};

/// Multiple-shot interrogation of an ensemble of identically prepared
/// systems, one question per fresh copy, in per-question batches.
TomographyResult run_tomography(const SystemKind& sys, const DensityMatrix& preparation,
                                std::int64_t shots_per_question,
                                const std::vector<QuestionIndex>& questions,
                                std::uint64_t seed);

struct AxiomCheck {
  std::string name;
  bool passed = false;
  double statistic = 0.0;  // observed deviation
  double bound = 0.0;      // allowed deviation
  std::string detail;
};

struct AxiomReport {
  SystemKind sys;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<AxiomCheck> checks;

  bool all_passed() const;
  std::string to_string() const;  // stable formatting, bit-identical per seed
};

/// Statistical self-tests of the interrogation rules: repeatability of
/// answers, invariance of a compatible independent question's marginal
/// (3 sigma binomial bounds), obsolescence of information under a
/// complementary question, simultaneous definiteness of pairwise compatible
/// triples, and conservation of total information during single-shot
/// collapse on pure preparations.
AxiomReport validate_axioms(const SystemKind& sys, std::int64_t trials, std::uint64_t seed);

}  // namespace gbit
