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
//
// End-to-end acceptance suite. Each criterion prints one pass/fail line and
// the binary exits non-zero when any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gbit/algebra.hpp"
#include "gbit/entangle.hpp"
#include "gbit/evolve.hpp"
#include "gbit/gf2.hpp"
#include "gbit/json_io.hpp"
#include "gbit/lattice.hpp"
#include "gbit/oracle.hpp"
#include "gbit/rng.hpp"
#include "gbit/sim.hpp"

using namespace gbit;

namespace {

int g_failures = 0;

void run_criterion(int number, const std::string& title,
                   const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool passed = false;
  const auto start = std::chrono::steady_clock::now();
  try {
    passed = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!passed) ++g_failures;
  std::printf("[%s] %02d %s (%.2fs)%s%s\n", passed ? "PASS" : "FAIL", number, title.c_str(),
              seconds, detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
}

DensityMatrix maximally_mixed(const SystemKind& sys) {
  return DensityMatrix::Identity(sys.dim(), sys.dim()) / static_cast<double>(sys.dim());
}

std::string tagof(const SystemKind& sys) {
  return to_string(sys.kind) + " n=" + std::to_string(sys.n);
}

DensityMatrix assign_yes(const SystemKind& sys, const std::vector<QuestionIndex>& qs) {
  DensityMatrix rho = maximally_mixed(sys);
  for (const auto& q : qs) rho = lueders_update(sys, rho, q, true);
  return rho;
}

bool criterion_counting(std::string& detail) {
  const std::int64_t qubit_sizes[4] = {3, 15, 63, 255};
  const std::int64_t rebit_sizes[4] = {2, 9, 35, 135};
  for (int n = 1; n <= 4; ++n) {
    if (enumerate_complete_set({GbitKind::Qubit, n}).size() != qubit_sizes[n - 1]) {
      detail = "qubit n=" + std::to_string(n);
      return false;
    }
    if (enumerate_complete_set({GbitKind::Rebit, n}).size() != rebit_sizes[n - 1]) {
      detail = "rebit n=" + std::to_string(n);
      return false;
    }
  }
  detail = "qubit 3,15,63,255; rebit 2,9,35,135";
  return true;
}

bool criterion_oracle_equivalence(std::string& detail) {
  std::int64_t pairs = 0;
  for (const GbitKind kind : {GbitKind::Qubit, GbitKind::Rebit}) {
    const SystemKind sys{kind, 3};
    const auto set = enumerate_complete_set(sys);
    for (std::int64_t i = 0; i < set.size(); ++i) {
      for (std::int64_t j = i; j < set.size(); ++j) {
        if (is_compatible(set.members[i], set.members[j]) !=
            commutes(sys, set.members[i], set.members[j])) {
          detail = set.members[i].str() + " vs " + set.members[j].str();
          return false;
        }
        ++pairs;
      }
    }
  }
  detail = std::to_string(pairs) + " pairs at n=3, both kinds";
  return true;
}

bool criterion_parity(std::string& detail) {
  std::int64_t pairs = 0;
  for (const GbitKind kind : {GbitKind::Qubit, GbitKind::Rebit}) {
    for (int n = 1; n <= 3; ++n) {
      const SystemKind sys{kind, n};
      const auto set = enumerate_complete_set(sys);
      for (const auto& a : set.members) {
        for (const auto& b : set.members) {
          if (a == b || !is_compatible(a, b)) continue;
          const auto composed = as_question(xnor_compose(sys, {a, +1}, {b, +1}));
          if (composed.sign != product_sign(sys, a, b)) {
            detail = a.str() + " * " + b.str();
            return false;
          }
          ++pairs;
        }
      }
    }
  }
  // The named instances: 11*22 = !33 and 12*21 = 33.
  const SystemKind sys{GbitKind::Qubit, 2};
  const auto odd = as_question(
      xnor_compose(sys, {QuestionIndex({1, 1}), +1}, {QuestionIndex({2, 2}), +1}));
  const auto even = as_question(
      xnor_compose(sys, {QuestionIndex({1, 2}), +1}, {QuestionIndex({2, 1}), +1}));
  if (odd.str() != "!33" || even.str() != "33") {
    detail = "bell instance signs " + odd.str() + ", " + even.str();
    return false;
  }
  detail = std::to_string(pairs) + " compatible ordered pairs, n <= 3";
  return true;
}

bool criterion_lattice(std::string& detail) {
  const QuestionGraph qubit = build_lattice({GbitKind::Qubit, 2});
  const QuestionGraph rebit = build_lattice({GbitKind::Rebit, 2});
  auto degrees_ok = [](const QuestionGraph& g, int tri, int deg, int comp) {
    for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
      if (g.triangle_count(v) != tri || g.degree(v) != deg ||
          static_cast<int>(g.vertices.size()) - 1 - g.degree(v) != comp) {
        return false;
      }
    }
    return true;
  };
  const bool ok = qubit.triangles.size() == 15 && qubit.edges.size() == 45 &&
                  degrees_ok(qubit, 3, 6, 8) && rebit.triangles.size() == 6 &&
                  rebit.edges.size() == 18 && degrees_ok(rebit, 2, 4, 4);
  detail = "qubit 15/45/3/6/8, rebit 6/18/2/4/4";
  return ok;
}

bool criterion_frustration(std::string& detail) {
  const SystemKind sys{GbitKind::Qubit, 2};
  const QuestionIndex q11({1, 1}), q22({2, 2}), q12({1, 2}), q21({2, 1});
  auto [vars_a, system_a] =
      individuals_encoding(sys, {{{q11}, true}, {{q22}, true}, {{q12, q21}, false}});
  auto [vars_b, system_b] =
      individuals_encoding(sys, {{{q11}, true}, {{q22}, true}, {{q12, q21}, true}});
  if (frustration_check(vars_a, system_a).satisfiable) {
    detail = "bell instance not frustrated";
    return false;
  }
  if (!frustration_check(vars_b, system_b).satisfiable) {
    detail = "relaxed bell instance not satisfiable";
    return false;
  }

  auto brute = [](int num_vars, const std::vector<Gf2Constraint>& cs) {
    for (std::uint32_t mask = 0; mask < (1u << num_vars); ++mask) {
      bool all = true;
      for (const auto& c : cs) {
        int parity = 0;
        for (int v : c.vars) parity ^= (mask >> v) & 1;
        if (parity != c.rhs) {
          all = false;
          break;
        }
      }
      if (all) return true;
    }
    return false;
  };
  std::mt19937_64 eng = stream_for(2026, 55);
  for (int t = 0; t < 300; ++t) {
    const int num_vars = 2 + static_cast<int>(uniform01(eng) * 10.0);  // up to 12
    std::vector<Gf2Constraint> cs;
    const int num_cons = 1 + static_cast<int>(uniform01(eng) * 14.0);
    for (int c = 0; c < num_cons; ++c) {
      Gf2Constraint con;
      con.rhs = uniform01(eng) < 0.5 ? 0 : 1;
      for (int v = 0; v < num_vars; ++v) {
        if (uniform01(eng) < 0.4) con.vars.push_back(v);
      }
      cs.push_back(std::move(con));
    }
    if (frustration_check(num_vars, cs).satisfiable != brute(num_vars, cs)) {
      detail = "mismatch on random instance";
      return false;
    }
  }
  detail = "bell pair + 300 random systems up to 12 variables";
  return true;
}

bool criterion_handedness(std::string& detail) {
  int consistent = 0;
  for (int mask = 0; mask < 8; ++mask) {
    const Parity ab = (mask & 1) ? Parity::Odd : Parity::Even;
    const Parity ac = (mask & 2) ? Parity::Odd : Parity::Even;
    const Parity bc = (mask & 4) ? Parity::Odd : Parity::Even;
    if (handedness_consistency(3, {{{0, 1}, ab}, {{0, 2}, ac}, {{1, 2}, bc}})) ++consistent;
  }
  detail = std::to_string(consistent) + " of 8 assignments consistent";
  return consistent == 4;
}

bool criterion_information(std::string& detail) {
  std::mt19937_64 eng = stream_for(7, 0);
  for (const GbitKind kind : {GbitKind::Qubit, GbitKind::Rebit}) {
    for (int n = 1; n <= 3; ++n) {
      const SystemKind sys{kind, n};
      if (std::abs(information_total(BlochState::no_information(sys))) > 1e-12) {
        detail = "no-information state has non-zero length";
        return false;
      }
      const double max_info = static_cast<double>(sys.dim() - 1);
      for (int t = 0; t < 100; ++t) {
        const DensityMatrix rho =
            random_pure_density(eng, static_cast<int>(sys.dim()), kind == GbitKind::Rebit);
        const BlochState state = density_to_bloch(sys, rho);
        if (std::abs(information_total(state) - max_info) > 1e-9) {
          detail = "pure state misses the bound at " + tagof(sys);
          return false;
        }
        if ((classify(state) == InfoClassification::Pure) !=
            (std::abs(purity(rho) - 1.0) <= 1e-9)) {
          detail = "classification disagrees with tr(rho^2)";
          return false;
        }
        const DensityMatrix mixed =
            random_density(eng, static_cast<int>(sys.dim()), kind == GbitKind::Rebit);
        const BlochState mstate = density_to_bloch(sys, mixed);
        if ((classify(mstate) == InfoClassification::Pure) !=
            (std::abs(purity(mixed) - 1.0) <= 1e-9)) {
          detail = "mixed-state classification disagrees with tr(rho^2)";
          return false;
        }
      }
    }
  }
  const SystemKind two{GbitKind::Qubit, 2};
  const BlochState bell = density_to_bloch(
      two, assign_yes(two, {QuestionIndex({1, 1}), QuestionIndex({2, 2})}));
  if (std::abs(information_total(bell) - 3.0) > 1e-9) {
    detail = "bell state information != 3";
    return false;
  }
  detail = "100 random pure/mixed states per kind and n <= 3; bell = 3 bits";
  return true;
}

bool criterion_conservation(std::string& detail) {
  std::mt19937_64 eng = stream_for(8, 0);
  double worst = 0.0;
  for (const GbitKind kind : {GbitKind::Qubit, GbitKind::Rebit}) {
    for (int n = 1; n <= 3; ++n) {
      const SystemKind sys{kind, n};
      const std::int64_t d = sys.complete_set_size();
      for (int t = 0; t < 100; ++t) {
        // Landscape variant on an in-ball catalogue.
        Eigen::VectorXd r(d);
        for (Eigen::Index i = 0; i < d; ++i) r[i] = normal01(eng);
        r *= 0.9 / std::max(1.0, r.norm());
        const BlochState state(sys, ((r.array() + 1.0) / 2.0).matrix(), 1.0);
        Eigen::MatrixXd a(d, d);
        for (Eigen::Index i = 0; i < d; ++i) {
          for (Eigen::Index j = 0; j < d; ++j) a(i, j) = normal01(eng);
        }
        const LandscapeGenerator landscape((a - a.transpose()).eval());
        const double t1 = 2.0 * uniform01(eng) - 1.0;
        const double t2 = 2.0 * uniform01(eng) - 1.0;
        const BlochState moved = evolve(state, landscape, t1);
        worst =
            std::max(worst, std::abs(information_total(moved) - information_total(state)));
        worst = std::max(worst, (evolve(moved, landscape, t2).y -
                                 evolve(state, landscape, t1 + t2).y)
                                    .cwiseAbs()
                                    .maxCoeff());

        // Quantum variant on a random valid state.
        const BlochState qstate = density_to_bloch(
            sys, random_density(eng, static_cast<int>(sys.dim()), kind == GbitKind::Rebit));
        Eigen::MatrixXcd h(sys.dim(), sys.dim());
        for (Eigen::Index i = 0; i < sys.dim(); ++i) {
          for (Eigen::Index j = 0; j < sys.dim(); ++j) {
            h(i, j) = std::complex<double>(normal01(eng), normal01(eng));
          }
        }
        if (kind == GbitKind::Rebit) {
          Eigen::MatrixXd re = h.real();
          h = std::complex<double>(0, 1) *
              (re - re.transpose()).eval().cast<std::complex<double>>();
        } else {
          h = ((h + h.adjoint().eval()) / 2.0).eval();
        }
        const QuantumGenerator quantum(h);
        const BlochState qmoved = evolve(qstate, quantum, t1);
        worst = std::max(worst,
                         std::abs(information_total(qmoved) - information_total(qstate)));
        worst = std::max(worst, (evolve(qmoved, quantum, t2).y -
                                 evolve(qstate, quantum, t1 + t2).y)
                                    .cwiseAbs()
                                    .maxCoeff());
      }
    }
  }
  std::ostringstream os;
  os << "max deviation " << worst;
  detail = os.str();
  return worst < 1e-9;
}

bool criterion_mixing(std::string& detail) {
  std::mt19937_64 eng = stream_for(9, 0);
  const SystemKind sys{GbitKind::Qubit, 2};
  for (int t = 0; t < 200; ++t) {
    const BlochState s1 = density_to_bloch(sys, random_density(eng, 4));
    const BlochState s2 = density_to_bloch(sys, random_density(eng, 4));
    if ((s1.y - s2.y).cwiseAbs().maxCoeff() < 1e-9) continue;
    const double lambda = 0.05 + 0.9 * uniform01(eng);
    if (information_total(convex_mix(lambda, s1, s2)) >=
        std::max(information_total(s1), information_total(s2))) {
      detail = "mixture did not strictly lose information";
      return false;
    }
    const Eigen::VectorXd scaled = lambda * s1.bloch_vector();
    const BlochState shrunk(sys, ((scaled.array() + 1.0) / 2.0).matrix(), 1.0);
    if (std::abs(information_total(shrunk) - lambda * lambda * information_total(s1)) >
        1e-12 * std::max(1.0, information_total(s1))) {
      detail = "homogeneity deviation above 1e-12";
      return false;
    }
  }
  detail = "200 random pairs, strict mixing and lambda^2 scaling";
  return true;
}

bool criterion_monogamy(std::string& detail) {
  // With the 110 and 220 correlations answered, the questions with support on
  // the third gbit compatible with both are exactly the diagonal family
  // (d,d,k); in particular no bare bipartite correlation with the third gbit
  // survives, and every survivor reduces to individual information about it.
  const SystemKind sys{GbitKind::Qubit, 3};
  const QuestionIndex q110({1, 1, 0}), q220({2, 2, 0});
  std::set<std::string> got;
  for (const auto& q : enumerate_complete_set(sys).members) {
    if (q[2] == 0) continue;
    if (is_compatible(q, q110) && is_compatible(q, q220)) {
      if (q.weight() == 2) {
        detail = "bipartite correlation " + q.str() + " slipped through";
        return false;
      }
      got.insert(q.str());
    }
  }
  std::set<std::string> expected;
  for (int d = 0; d <= 3; ++d) {
    for (int k = 1; k <= 3; ++k) expected.insert(QuestionIndex({d, d, k}).str());
  }
  if (got != expected) {
    detail = "support-on-C set has " + std::to_string(got.size()) + " members";
    return false;
  }
  for (int k = 1; k <= 3; ++k) {
    const auto closure = logical_closure(
        sys, {{q110, +1}, {q220, +1}, {QuestionIndex({0, 0, k}), +1}});
    std::set<std::string> closed;
    for (const auto& sq : closure) closed.insert(sq.index.str());
    for (int d = 0; d <= 3; ++d) {
      if (!closed.count(QuestionIndex({d, d, k}).str())) {
        detail = "survivor outside the individual closure";
        return false;
      }
    }
  }

  std::mt19937_64 eng = stream_for(10, 0);
  for (int t = 0; t < 100; ++t) {
    const Tangles tau = tangles(density_to_bloch(sys, random_density(eng, 8)));
    if (tau.tau_a_bc < tau.tau_ab + tau.tau_ac - 1e-12 ||
        std::abs(tau.tau_a_bc - tau.tau_ab - tau.tau_ac - tau.three_tangle) > 1e-12) {
      detail = "tangle inequality or slack identity failed";
      return false;
    }
  }
  detail = "12 diagonal survivors; tangle slack exact on 100 random states";
  return true;
}

bool criterion_ghz(std::string& detail) {
  const SystemKind sys{GbitKind::Qubit, 3};
  const QuestionIndex a({2, 1, 1}), b({1, 2, 1}), c({1, 1, 2});
  if (!is_mutually_compatible({a, b, c}) || !simultaneous_eigenbasis_exists(sys, {a, b, c})) {
    detail = "generators not mutually compatible";
    return false;
  }
  const auto closure = logical_closure(sys, {{a, +1}, {b, +1}, {c, +1}});
  if (closure.size() != 7) {
    detail = "closure has " + std::to_string(closure.size()) + " members";
    return false;
  }
  std::set<std::string> names;
  for (const auto& sq : closure) names.insert(sq.index.str());
  for (const char* want : {"330", "303", "033", "222"}) {
    if (!names.count(want)) {
      detail = std::string("missing ") + want;
      return false;
    }
  }

  const DensityMatrix rho = assign_yes(sys, {a, b, c});
  const auto questions = enumerate_complete_set(sys).members;
  const std::int64_t shots = 100000;
  const auto result = run_tomography(sys, rho, shots, questions, 31337);
  const double band = 5.0 / std::sqrt(static_cast<double>(shots));
  double worst = 0.0;
  for (std::size_t i = 0; i < questions.size(); ++i) {
    const double truth = born_probability(sys, rho, questions[i]);
    worst = std::max(worst, std::abs(result.y_hat[static_cast<Eigen::Index>(i)] - truth));
  }
  std::ostringstream os;
  os << "closure of 7; tomography max |y_hat - y| = " << worst << " (band " << band << ")";
  detail = os.str();
  return worst <= band;
}

bool criterion_axioms(std::string& detail) {
  const AxiomReport report = validate_axioms({GbitKind::Qubit, 2}, 10000, 20260501);
  const AxiomReport again = validate_axioms({GbitKind::Qubit, 2}, 10000, 20260501);
  if (report.to_string() != again.to_string()) {
    detail = "report not deterministic";
    return false;
  }
  if (!report.all_passed()) {
    detail = report.to_string();
    return false;
  }
  detail = std::to_string(report.checks.size()) + " statistical checks at 10^4 trials";
  return true;
}

bool criterion_rebit(std::string& detail) {
  for (int n = 1; n <= 3; ++n) {
    const SystemKind sys{GbitKind::Rebit, n};
    for (const auto& q : enumerate_complete_set(sys).members) {
      const auto& rep = cached_matrix_of(sys, q);
      for (Eigen::Index i = 0; i < rep.matrix.rows(); ++i) {
        for (Eigen::Index j = 0; j < rep.matrix.cols(); ++j) {
          if (!rep.matrix(i, j).is_real() || rep.matrix(i, j) != rep.matrix(j, i)) {
            detail = "operator " + q.str() + " is not real symmetric";
            return false;
          }
        }
      }
    }
    const auto set = enumerate_complete_set(sys);
    for (const auto& x : set.members) {
      for (const auto& y : set.members) {
        if (x == y || !is_compatible(x, y)) continue;
        const auto composed = compose_index(x, y);
        if (composed && composed->count_threes() % 2 != 0) {
          detail = "closure broke the even 3-count";
          return false;
        }
      }
    }
  }

  // Litmus test: answering the correlation-of-correlations wipes out all
  // individual information.
  const SystemKind sys{GbitKind::Rebit, 2};
  const DensityMatrix rho = assign_yes(sys, {QuestionIndex({3, 3})});
  for (const auto& q : enumerate_complete_set(sys).members) {
    if (q.weight() != 1) continue;
    if (std::abs(born_probability(sys, rho, q) - 0.5) > 1e-12) {
      detail = "individual " + q.str() + " is not equidistributed";
      return false;
    }
  }
  detail = "real symmetric operators, even 3-count closure, 33-litmus";
  return true;
}

}  // namespace

int main() {
  std::printf("acceptance suite\n");
  run_criterion(1, "counting theorems", criterion_counting);
  run_criterion(2, "compatibility equals commutation, exhaustive n=3", criterion_oracle_equivalence);
  run_criterion(3, "composition signs equal operator product signs", criterion_parity);
  run_criterion(4, "lattice degrees", criterion_lattice);
  run_criterion(5, "bell frustration and GF(2) solver", criterion_frustration);
  run_criterion(6, "handedness: 4 of 8 parity assignments", criterion_handedness);
  run_criterion(7, "information measure and purity", criterion_information);
  run_criterion(8, "evolution conserves information, group law", criterion_conservation);
  run_criterion(9, "mixing strictness and quadratic homogeneity", criterion_mixing);
  run_criterion(10, "monogamy of the maximally entangled pair", criterion_monogamy);
  run_criterion(11, "ghz structure and tomography", criterion_ghz);
  run_criterion(12, "axiom self-tests, deterministic", criterion_axioms);
  run_criterion(13, "rebit structure and entanglement litmus", criterion_rebit);
  if (g_failures > 0) {
    std::printf("%d criteria FAILED\n", g_failures);
    return 1;
  }
  std::printf("all 13 criteria passed\n");
  return 0;
}
