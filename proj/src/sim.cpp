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

#include "gbit/sim.hpp"

#include <cmath>
#include <sstream>

#include "gbit/algebra.hpp"
#include "gbit/rng.hpp"

namespace gbit {

Transcript run_single_shot(const Interrogation& interrogation, std::uint64_t shot_index) {
  const SystemKind& sys = interrogation.sys;
  for (const auto& q : interrogation.script) q.require_valid_for(sys);

  std::mt19937_64 eng = stream_for(interrogation.seed, shot_index);
  Transcript transcript;
  transcript.shot = shot_index;
  DensityMatrix rho = interrogation.preparation;
  for (const auto& q : interrogation.script) {
    const double y = born_probability(sys, rho, q);
    // A zero-probability branch is never drawn: u < y fails for y = 0 and
    // holds for every u when y = 1.
    const bool yes = uniform01(eng) < y;
    rho = lueders_update(sys, rho, q, yes);
    transcript.entries.push_back({q, yes, y, density_to_bloch(sys, rho)});
  }
  return transcript;
}

BlochState TomographyResult::estimate() const {
  Eigen::VectorXd y = Eigen::VectorXd::Constant(sys.complete_set_size(), 0.5);
  for (std::size_t i = 0; i < questions.size(); ++i) {
    y[complete_set_position(sys, questions[i])] = y_hat[i];
  }
  return BlochState(sys, std::move(y), 1.0);
}

TomographyResult run_tomography(const SystemKind& sys, const DensityMatrix& preparation,
                                std::int64_t shots_per_question,
                                const std::vector<QuestionIndex>& questions,
                                std::uint64_t seed) {
  if (questions.empty()) throw Error("run_tomography: empty question set");
  if (shots_per_question < 1) throw Error("run_tomography: need at least one shot");

  TomographyResult result;
  result.sys = sys;
  result.questions = questions;
  result.y_hat.resize(questions.size());
  result.std_error.resize(questions.size());
  result.shots_per_question = shots_per_question;

  for (std::size_t i = 0; i < questions.size(); ++i) {
    questions[i].require_valid_for(sys);
    // Every shot interrogates a fresh copy of the preparation with this one
    // question, so the answers are i.i.d. with the preparation's Born
    // probability.
    const double y_true = born_probability(sys, preparation, questions[i]);
    std::int64_t yes_count = 0;
    for (std::int64_t k = 0; k < shots_per_question; ++k) {
      std::mt19937_64 eng =
          stream_for(seed, static_cast<std::uint64_t>(i) * shots_per_question + k);
      if (uniform01(eng) < y_true) ++yes_count;
    }
    const double y_hat =
        static_cast<double>(yes_count) / static_cast<double>(shots_per_question);
    result.y_hat[i] = y_hat;
    result.std_error[i] =
        std::sqrt(y_hat * (1.0 - y_hat) / static_cast<double>(shots_per_question));
  }
  return result;
}

bool AxiomReport::all_passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

std::string AxiomReport::to_string() const {
  std::ostringstream os;
  os.precision(6);
  os << std::fixed;
  os << "axiom validation: kind=" << gbit::to_string(sys.kind) << " n=" << sys.n
     << " trials=" << trials << " seed=" << seed << "\n";
  for (const auto& c : checks) {
    os << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name << ": deviation "
       << c.statistic << " (bound " << c.bound << ") " << c.detail << "\n";
  }
  os << (all_passed() ? "all checks passed" : "CHECKS FAILED") << "\n";
  return os.str();
}

namespace {

QuestionIndex random_question(std::mt19937_64& eng, const QuestionSet& set) {
  const auto i = static_cast<std::size_t>(uniform01(eng) * static_cast<double>(set.members.size()));
  return set.members[std::min(i, set.members.size() - 1)];
}

// Repeatability: asking the same question twice in one shot repeats the
// answer, every time.
AxiomCheck check_repeatability(const SystemKind& sys, const QuestionSet& set,
                               std::int64_t trials, std::uint64_t seed) {
  std::int64_t failures = 0;
  for (std::int64_t t = 0; t < trials; ++t) {
    std::mt19937_64 eng = stream_for(seed, t);
    DensityMatrix rho = random_density(eng, static_cast<int>(sys.dim()),
                                       sys.kind == GbitKind::Rebit);
    const QuestionIndex q = random_question(eng, set);
    Interrogation session{sys, rho, {q, q}, seed ^ 0xabcdef12u};
    const Transcript tr = run_single_shot(session, static_cast<std::uint64_t>(t));
    if (tr.entries[0].yes != tr.entries[1].yes) ++failures;
  }
  AxiomCheck check;
  check.name = "repeatability";
  check.statistic = static_cast<double>(failures);
  check.bound = 0.0;
  check.passed = failures == 0;
  check.detail = "repeated answers differed " + std::to_string(failures) + " times";
  return check;
}

// A compatible independent question leaves the marginal of the other
// invariant: the yes-frequency of q2 with and without first asking q1 agree
// within 3 sigma.
AxiomCheck check_invariance(const SystemKind& sys, std::int64_t trials, std::uint64_t seed) {
  // Fixed compatible independent pair with disjoint support; needs n >= 2.
  std::vector<std::uint8_t> i1(sys.n, 0), i2(sys.n, 0);
  i1[0] = 1;
  i2[1] = 2;
  QuestionIndex q1(i1);
  QuestionIndex q2(i2);

  std::mt19937_64 prep_eng = stream_for(seed, 0x51a7e);
  const DensityMatrix rho =
      random_density(prep_eng, static_cast<int>(sys.dim()), sys.kind == GbitKind::Rebit);

  std::int64_t direct_yes = 0, after_yes = 0;
  for (std::int64_t t = 0; t < trials; ++t) {
    const Transcript direct =
        run_single_shot({sys, rho, {q2}, seed ^ 0x11u}, static_cast<std::uint64_t>(t));
    if (direct.entries[0].yes) ++direct_yes;
    const Transcript after =
        run_single_shot({sys, rho, {q1, q2}, seed ^ 0x22u}, static_cast<std::uint64_t>(t));
    if (after.entries[1].yes) ++after_yes;
  }
  const double n = static_cast<double>(trials);
  const double f1 = static_cast<double>(direct_yes) / n;
  const double f2 = static_cast<double>(after_yes) / n;
  const double pooled = (f1 + f2) / 2.0;
  const double sigma = std::sqrt(std::max(pooled * (1.0 - pooled), 1e-12) * 2.0 / n);

  AxiomCheck check;
  check.name = "compatible-independent invariance";
  check.statistic = std::abs(f1 - f2);
  check.bound = 3.0 * sigma;
  check.passed = check.statistic <= check.bound;
  std::ostringstream os;
  os.precision(6);
  os << std::fixed << "marginal of " << q2.str() << " direct " << f1 << " vs after "
     << q1.str() << " " << f2;
  check.detail = os.str();
  return check;
}

// n=1 collapse chain: knowing Q1, asking the complementary Q2 makes the
// previous Q1 information obsolete -- re-asking Q1 is a fair coin.
AxiomCheck check_complementarity_refresh(const SystemKind& sys, std::int64_t trials,
                                         std::uint64_t seed) {
  const SystemKind single{sys.kind, 1};
  QuestionIndex q1({1}), q2({2});
  DensityMatrix plus = DensityMatrix::Identity(2, 2) / 2.0;
  plus = lueders_update(single, plus, q1, true);

  std::int64_t yes = 0;
  for (std::int64_t t = 0; t < trials; ++t) {
    const Transcript tr =
        run_single_shot({single, plus, {q2, q1}, seed ^ 0x33u}, static_cast<std::uint64_t>(t));
    if (tr.entries[1].yes) ++yes;
  }
  const double n = static_cast<double>(trials);
  const double f = static_cast<double>(yes) / n;

  AxiomCheck check;
  check.name = "complementary question refreshes";
  check.statistic = std::abs(f - 0.5);
  check.bound = 3.0 * std::sqrt(0.25 / n);
  check.passed = check.statistic <= check.bound;
  check.detail = "re-asked frequency " + std::to_string(f) + " (want 1/2)";
  return check;
}

// Pairwise compatible triples have simultaneously definite answers: asking
// q1,q2,q3 then re-asking all three repeats every answer.
AxiomCheck check_specker(const SystemKind& sys, const QuestionSet& set, std::int64_t trials,
                         std::uint64_t seed) {
  std::int64_t failures = 0, tested = 0;
  for (std::int64_t t = 0; t < trials; ++t) {
    std::mt19937_64 eng = stream_for(seed, 0x700000u + t);
    const QuestionIndex a = random_question(eng, set);
    const QuestionIndex b = random_question(eng, set);
    const QuestionIndex c = random_question(eng, set);
    if (a == b || a == c || b == c) continue;
    if (!is_mutually_compatible({a, b, c})) continue;
    ++tested;
    DensityMatrix rho = random_density(eng, static_cast<int>(sys.dim()),
                                       sys.kind == GbitKind::Rebit);
    const Transcript tr = run_single_shot({sys, rho, {a, b, c, a, b, c}, seed ^ 0x44u},
                                          static_cast<std::uint64_t>(t));
    for (int k = 0; k < 3; ++k) {
      if (tr.entries[k].yes != tr.entries[k + 3].yes) {
        ++failures;
        break;
      }
    }
  }
  AxiomCheck check;
  check.name = "mutual compatibility (pairwise compatible triples)";
  check.statistic = static_cast<double>(failures);
  check.bound = 0.0;
  check.passed = failures == 0;
  check.detail = std::to_string(tested) + " compatible triples re-answered identically";
  return check;
}

// Collapse on a pure preparation reshuffles but never destroys total
// information: 2^n - 1 bits after every answer.
AxiomCheck check_conservation(const SystemKind& sys, std::int64_t trials, std::uint64_t seed) {
  const double max_info = static_cast<double>((std::int64_t(1) << sys.n) - 1);
  const auto set = enumerate_complete_set(sys);
  double worst = 0.0;
  const std::int64_t shots = std::max<std::int64_t>(1, trials / 100);
  for (std::int64_t t = 0; t < shots; ++t) {
    std::mt19937_64 eng = stream_for(seed, 0x900000u + t);
    DensityMatrix rho = random_pure_density(eng, static_cast<int>(sys.dim()),
                                            sys.kind == GbitKind::Rebit);
    std::vector<QuestionIndex> script;
    for (int k = 0; k < 4; ++k) script.push_back(random_question(eng, set));
    const Transcript tr =
        run_single_shot({sys, rho, script, seed ^ 0x55u}, static_cast<std::uint64_t>(t));
    for (const auto& entry : tr.entries) {
      worst = std::max(worst, std::abs(information_total(entry.post) - max_info));
    }
  }
  AxiomCheck check;
  check.name = "information conservation under collapse";
  check.statistic = worst;
  check.bound = 1e-9;
  check.passed = worst <= check.bound;
  check.detail = "max |I - (2^n - 1)| over post-answer states";
  return check;
}

}  // namespace

AxiomReport validate_axioms(const SystemKind& sys, std::int64_t trials, std::uint64_t seed) {
  if (trials < 1) throw Error("validate_axioms: need at least one trial");
  AxiomReport report;
  report.sys = sys;
  report.trials = trials;
  report.seed = seed;

  const QuestionSet set = enumerate_complete_set(sys);
  report.checks.push_back(check_repeatability(sys, set, std::max<std::int64_t>(1, trials / 10),
                                              splitmix64(seed)));
  if (sys.n >= 2) {
    report.checks.push_back(check_invariance(sys, trials, splitmix64(seed + 1)));
  }
  report.checks.push_back(check_complementarity_refresh(sys, trials, splitmix64(seed + 2)));
  report.checks.push_back(
      check_specker(sys, set, std::max<std::int64_t>(1, trials / 10), splitmix64(seed + 3)));
  report.checks.push_back(check_conservation(sys, trials, splitmix64(seed + 4)));
  return report;
}

}  // namespace gbit
