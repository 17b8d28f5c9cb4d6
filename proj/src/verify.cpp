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

#include "gbit/verify.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "gbit/algebra.hpp"
#include "gbit/entangle.hpp"
#include "gbit/evolve.hpp"
#include "gbit/gf2.hpp"
#include "gbit/lattice.hpp"
#include "gbit/oracle.hpp"
#include "gbit/rng.hpp"
#include "gbit/sim.hpp"

namespace gbit {

namespace {

CheckResult make(const std::string& name, bool pass, const std::string& detail) {
  return CheckResult{name, pass, detail};
}

std::string tag(const SystemKind& sys) {
  return to_string(sys.kind) + " n=" + std::to_string(sys.n);
}

CheckResult check_counting(GbitKind kind) {
  bool ok = true;
  std::ostringstream os;
  for (int n = 1; n <= 5; ++n) {
    const SystemKind sys{kind, n};
    const auto set = enumerate_complete_set(sys);
    if (set.size() != sys.complete_set_size()) ok = false;
    // Positions must be consistent with the enumeration order.
    if (n <= 4) {
      for (std::int64_t i = 0; i < set.size(); ++i) {
        if (complete_set_position(sys, set.members[i]) != i) ok = false;
      }
    }
    os << (n > 1 ? "," : "") << set.size();
  }
  return make("complete-set counting [" + to_string(kind) + ", n=1..5]", ok, os.str());
}

CheckResult check_compat_oracle(const SystemKind& sys) {
  const auto set = enumerate_complete_set(sys);
  std::int64_t pairs = 0;
  for (std::int64_t i = 0; i < set.size(); ++i) {
    for (std::int64_t j = i; j < set.size(); ++j) {
      if (is_compatible(set.members[i], set.members[j]) !=
          commutes(sys, set.members[i], set.members[j])) {
        return make("compatibility = commutation [" + tag(sys) + "]", false,
                    "mismatch at " + set.members[i].str() + "," + set.members[j].str());
      }
      ++pairs;
    }
  }
  return make("compatibility = commutation [" + tag(sys) + "]", true,
              std::to_string(pairs) + " pairs, exhaustive");
}

CheckResult check_compat_oracle_sampled(const SystemKind& sys, int samples,
                                        std::uint64_t seed) {
  const auto set = enumerate_complete_set(sys);
  std::mt19937_64 eng = stream_for(seed, sys.n);
  for (int s = 0; s < samples; ++s) {
    const auto pick = [&] {
      const auto i =
          static_cast<std::size_t>(uniform01(eng) * static_cast<double>(set.members.size()));
      return set.members[std::min(i, set.members.size() - 1)];
    };
    const QuestionIndex a = pick(), b = pick();
    if (is_compatible(a, b) != commutes(sys, a, b)) {
      return make("compatibility = commutation sampled [" + tag(sys) + "]", false,
                  "mismatch at " + a.str() + "," + b.str());
    }
  }
  return make("compatibility = commutation sampled [" + tag(sys) + "]", true,
              std::to_string(samples) + " random pairs");
}

CheckResult check_composition_signs(const SystemKind& sys) {
  const auto set = enumerate_complete_set(sys);
  std::int64_t compatible_pairs = 0;
  for (const auto& a : set.members) {
    for (const auto& b : set.members) {
      if (a == b || !is_compatible(a, b)) continue;
      ++compatible_pairs;
      const XnorResult r = xnor_compose(sys, {a, +1}, {b, +1});
      const SignedQuestion& sq = as_question(r);
      if (composition_parity(sys, a, b) != product_sign(sys, a, b) ||
          sq.sign != product_sign(sys, a, b)) {
        return make("composition sign = operator product sign [" + tag(sys) + "]", false,
                    "mismatch at " + a.str() + "," + b.str());
      }
      // Index agreement with the oracle's operator support.
      auto composed = compose_index(a, b);
      if (!composed || !(*composed == sq.index)) {
        return make("composition sign = operator product sign [" + tag(sys) + "]", false,
                    "index mismatch at " + a.str() + "," + b.str());
      }
    }
  }
  return make("composition sign = operator product sign [" + tag(sys) + "]", true,
              std::to_string(compatible_pairs) + " ordered compatible pairs");
}

CheckResult check_associativity(const SystemKind& sys) {
  const auto set = enumerate_complete_set(sys);
  std::int64_t triples = 0;
  for (std::size_t i = 0; i < set.members.size(); ++i) {
    for (std::size_t j = i + 1; j < set.members.size(); ++j) {
      if (!is_compatible(set.members[i], set.members[j])) continue;
      for (std::size_t k = j + 1; k < set.members.size(); ++k) {
        if (!is_compatible(set.members[i], set.members[k]) ||
            !is_compatible(set.members[j], set.members[k])) {
          continue;
        }
        ++triples;
        const SignedQuestion s1{set.members[i], +1}, s2{set.members[j], +1},
            s3{set.members[k], +1};
        // Compose in both orders on the extended domain (tautologies absorb).
        const XnorResult left_inner = xnor_compose(sys, s1, s2);
        const XnorResult right_inner = xnor_compose(sys, s2, s3);
        XnorResult left, right;
        if (is_tautology(left_inner)) {
          const int t = std::get<Truth>(left_inner) == Truth::Always ? +1 : -1;
          left = SignedQuestion(s3.index, t * s3.sign);
        } else {
          left = xnor_compose(sys, as_question(left_inner), s3);
        }
        if (is_tautology(right_inner)) {
          const int t = std::get<Truth>(right_inner) == Truth::Always ? +1 : -1;
          right = SignedQuestion(s1.index, t * s1.sign);
        } else {
          right = xnor_compose(sys, s1, as_question(right_inner));
        }
        const bool same =
            is_tautology(left) == is_tautology(right) &&
            (is_tautology(left) ? std::get<Truth>(left) == std::get<Truth>(right)
                                : as_question(left) == as_question(right));
        if (!same) {
          return make("composition associativity [" + tag(sys) + "]", false,
                      "triple " + s1.index.str() + "," + s2.index.str() + "," +
                          s3.index.str());
        }
      }
    }
  }
  return make("composition associativity [" + tag(sys) + "]", true,
              std::to_string(triples) + " mutually compatible triples");
}

CheckResult check_rebit_parity_closure(int n) {
  const SystemKind sys{GbitKind::Rebit, n};
  const auto set = enumerate_complete_set(sys);
  for (const auto& a : set.members) {
    for (const auto& b : set.members) {
      if (a == b || !is_compatible(a, b)) continue;
      const auto composed = compose_index(a, b);
      if (composed && composed->count_threes() % 2 != 0) {
        return make("rebit closure keeps 3-count even [n=" + std::to_string(n) + "]", false,
                    a.str() + "," + b.str() + " -> " + composed->str());
      }
    }
  }
  return make("rebit closure keeps 3-count even [n=" + std::to_string(n) + "]", true, "");
}

CheckResult check_lattice(const SystemKind& sys) {
  const QuestionGraph graph = build_lattice(sys);
  const bool qubit = sys.kind == GbitKind::Qubit;
  const std::size_t want_vertices = qubit ? 15 : 9;
  const std::size_t want_edges = qubit ? 45 : 18;
  const std::size_t want_triangles = qubit ? 15 : 6;
  const int want_tri_per_vertex = qubit ? 3 : 2;
  const int want_degree = qubit ? 6 : 4;
  const int want_complement = qubit ? 8 : 4;

  bool ok = graph.vertices.size() == want_vertices && graph.edges.size() == want_edges &&
            graph.triangles.size() == want_triangles;
  for (std::size_t v = 0; ok && v < graph.vertices.size(); ++v) {
    const int deg = graph.degree(static_cast<int>(v));
    ok = deg == want_degree &&
         static_cast<int>(graph.vertices.size()) - 1 - deg == want_complement &&
         graph.triangle_count(static_cast<int>(v)) == want_tri_per_vertex;
  }
  std::ostringstream os;
  os << graph.vertices.size() << " vertices, " << graph.edges.size() << " edges, "
     << graph.triangles.size() << " triangles";
  return make("lattice degrees [" + tag(sys) + "]", ok, os.str());
}

CheckResult check_bell_relation(const SystemKind& sys) {
  const QuestionIndex q11({1, 1}), q22({2, 2}), q12({1, 2}), q21({2, 1});
  const auto r1 = xnor_compose(sys, {q11, +1}, {q22, +1});
  const auto r2 = xnor_compose(sys, {q12, +1}, {q21, +1});
  const bool ok = as_question(r1).index == as_question(r2).index &&
                  as_question(r1).sign == -1 && as_question(r2).sign == +1;
  return make("bell sign relation [" + tag(sys) + "]", ok,
              "11*22 -> " + as_question(r1).str() + ", 12*21 -> " + as_question(r2).str());
}

bool brute_force_satisfiable(int num_vars, const std::vector<Gf2Constraint>& cs) {
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
}

CheckResult check_frustration(std::uint64_t seed) {
  // The two bipartite instances: correlated diagonals with anti-/correlated
  // cross pairs, expanded over individual variables.
  const SystemKind sys{GbitKind::Qubit, 2};
  const QuestionIndex q11({1, 1}), q22({2, 2}), q12({1, 2}), q21({2, 1});
  auto [vars1, frustrated_system] = individuals_encoding(
      sys, {{{q11}, true}, {{q22}, true}, {{q12, q21}, false}});
  auto [vars2, satisfiable_system] = individuals_encoding(
      sys, {{{q11}, true}, {{q22}, true}, {{q12, q21}, true}});
  bool ok = !frustration_check(vars1, frustrated_system).satisfiable &&
            frustration_check(vars2, satisfiable_system).satisfiable;
  ok = ok && frustration_check(0, {}).satisfiable;

  // Random instances against exhaustive truth-table search.
  std::mt19937_64 eng = stream_for(seed, 0xf2);
  for (int t = 0; ok && t < 200; ++t) {
    const int num_vars = 2 + static_cast<int>(uniform01(eng) * 10.0);  // <= 12
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
    const FrustrationOutcome outcome = frustration_check(num_vars, cs);
    if (outcome.satisfiable != brute_force_satisfiable(num_vars, cs)) ok = false;
    if (outcome.satisfiable) {
      // The witness must actually satisfy the system.
      for (const auto& c : cs) {
        int parity = 0;
        for (int v : c.vars) parity ^= outcome.witness[v];
        if (parity != c.rhs) ok = false;
      }
    } else if (outcome.inconsistent.empty()) {
      ok = false;
    }
  }
  return make("GF(2) solver vs exhaustive search", ok, "bell instances + 200 random systems");
}

CheckResult check_handedness() {
  // Three routes over the 8 parity assignments of a gbit triple: the counting
  // rule, realizability by a per-gbit handedness, and GF(2) consistency of
  // the pair-question identities with constants taken from the oracle.
  const SystemKind three{GbitKind::Qubit, 3};
  const QuestionIndex e_ab({3, 3, 0}), e_ac({3, 0, 3}), e_bc({0, 3, 3});
  const QuestionIndex d1_ab({1, 1, 0}), d2_ab({2, 2, 0});
  const QuestionIndex d1_ac({1, 0, 1}), d2_ac({2, 0, 2});
  const QuestionIndex d1_bc({0, 1, 1}), d2_bc({0, 2, 2});

  // P(e_ab) P(e_ac) = s P(e_bc), so the product of all three is s * I and the
  // three simultaneous answers satisfy x_ab ^ x_ac ^ x_bc = [s = +1].
  const int s_e = product_sign(three, e_ab, e_ac);
  const int rhs_e = s_e > 0 ? 1 : 0;
  // The chain observables are the pair products P(d1) P(d2) = eps P(e); their
  // triple product is eps_ab eps_ac eps_bc s * I.
  const int s_u = product_sign(three, d1_ab, d2_ab) * product_sign(three, d1_ac, d2_ac) *
                  product_sign(three, d1_bc, d2_bc) * s_e;
  const int rhs_u = s_u > 0 ? 1 : 0;

  int consistent = 0;
  bool ok = true;
  std::set<std::array<int, 3>> from_handedness;
  for (int h = 0; h < 8; ++h) {
    auto same = [&](int a, int b) { return ((h >> a) & 1) == ((h >> b) & 1); };
    // Equally handed pairs carry odd correlation.
    from_handedness.insert({same(0, 1) ? 1 : 0, same(0, 2) ? 1 : 0, same(1, 2) ? 1 : 0});
  }
  for (int mask = 0; mask < 8; ++mask) {
    const Parity ab = (mask & 1) ? Parity::Odd : Parity::Even;
    const Parity ac = (mask & 2) ? Parity::Odd : Parity::Even;
    const Parity bc = (mask & 4) ? Parity::Odd : Parity::Even;
    const bool rule =
        handedness_consistency(3, {{{0, 1}, ab}, {{0, 2}, ac}, {{1, 2}, bc}});
    if (rule) ++consistent;

    const bool realizable = from_handedness.count(
        {ab == Parity::Odd ? 1 : 0, ac == Parity::Odd ? 1 : 0, bc == Parity::Odd ? 1 : 0});
    if (rule != realizable) ok = false;

    // Variables 0..2: answers to the three pair questions; 3..5: answers to
    // the chains. The hypothesis "pair has parity p" couples them.
    std::vector<Gf2Constraint> cs;
    cs.push_back({{0, 1, 2}, rhs_e});
    cs.push_back({{3, 4, 5}, rhs_u});
    cs.push_back({{0, 3}, ab == Parity::Odd ? 1 : 0});
    cs.push_back({{1, 4}, ac == Parity::Odd ? 1 : 0});
    cs.push_back({{2, 5}, bc == Parity::Odd ? 1 : 0});
    if (frustration_check(6, cs).satisfiable != rule) ok = false;
  }
  ok = ok && consistent == 4;
  return make("handedness consistency (4 of 8 triples)", ok,
              std::to_string(consistent) + " consistent assignments");
}

CheckResult check_oracle_structure(const SystemKind& sys) {
  const auto set = enumerate_complete_set(sys);
  bool ok = true;
  for (const auto& q : set.members) {
    const auto& rep = cached_matrix_of(sys, q);
    // Involutory and traceless.
    const GaussMat squared = rep.matrix.lazyProduct(rep.matrix);
    GaussInt trace(0);
    for (Eigen::Index i = 0; i < rep.matrix.rows(); ++i) {
      trace += rep.matrix(i, i);
      for (Eigen::Index j = 0; j < rep.matrix.cols(); ++j) {
        const GaussInt want = i == j ? GaussInt(1) : GaussInt(0);
        if (squared(i, j) != want) ok = false;
        if (sys.kind == GbitKind::Rebit) {
          // Real symmetric.
          if (!rep.matrix(i, j).is_real() || rep.matrix(i, j) != rep.matrix(j, i)) ok = false;
        } else {
          // Hermitian.
          const GaussInt m = rep.matrix(i, j), mt = rep.matrix(j, i);
          if (m.re != mt.re || m.im != -mt.im) ok = false;
        }
      }
    }
    if (!trace.is_zero()) ok = false;
  }
  return make("operator structure (involutory, traceless, Hermitian/real) [" + tag(sys) + "]",
              ok, std::to_string(set.size()) + " operators");
}

CheckResult check_born_and_lueders(const SystemKind& sys, std::uint64_t seed) {
  const auto set = enumerate_complete_set(sys);
  const DensityMatrix mixed =
      DensityMatrix::Identity(sys.dim(), sys.dim()) / static_cast<double>(sys.dim());
  bool ok = true;
  double worst = 0.0;
  for (const auto& q : set.members) {
    worst = std::max(worst, std::abs(born_probability(sys, mixed, q) - 0.5));
  }
  ok = worst <= 1e-12;

  // Law-of-total-probability form of the invariance rule: for compatible
  // distinct pairs, the q2 marginal is unchanged by a q1 update, averaged
  // over both outcome branches.
  std::mt19937_64 eng = stream_for(seed, 0xb0);
  double worst_inv = 0.0;
  for (int t = 0; t < 50; ++t) {
    const DensityMatrix rho =
        random_density(eng, static_cast<int>(sys.dim()), sys.kind == GbitKind::Rebit);
    for (const auto& q1 : set.members) {
      for (const auto& q2 : set.members) {
        if (q1 == q2 || !is_compatible(q1, q2)) continue;
        const double before = born_probability(sys, rho, q2);
        const double y1 = born_probability(sys, rho, q1);
        double after = 0.0;
        if (y1 > 1e-12) {
          after += y1 * born_probability(sys, lueders_update(sys, rho, q1, true), q2);
        }
        if (1.0 - y1 > 1e-12) {
          after += (1.0 - y1) * born_probability(sys, lueders_update(sys, rho, q1, false), q2);
        }
        worst_inv = std::max(worst_inv, std::abs(before - after));
      }
    }
    if (sys.n > 2) break;  // one random state suffices at larger sizes
  }
  ok = ok && worst_inv <= 1e-10;
  std::ostringstream os;
  os << "no-information deviation " << worst << ", invariance deviation " << worst_inv;
  return make("born rule and update invariance [" + tag(sys) + "]", ok, os.str());
}

CheckResult check_information_measure(const SystemKind& sys, std::uint64_t seed) {
  const double max_info = static_cast<double>(sys.dim() - 1);
  bool ok = std::abs(information_total(BlochState::no_information(sys))) <= 1e-12;
  std::mt19937_64 eng = stream_for(seed, 0x1f);
  for (int t = 0; ok && t < 100; ++t) {
    const DensityMatrix pure =
        random_pure_density(eng, static_cast<int>(sys.dim()), sys.kind == GbitKind::Rebit);
    const BlochState state = density_to_bloch(sys, pure);
    if (std::abs(information_total(state) - max_info) > 1e-9) ok = false;
    if (classify(state) != InfoClassification::Pure) ok = false;
    if (std::abs(purity(pure) - 1.0) > 1e-9) ok = false;

    const DensityMatrix mixed =
        random_density(eng, static_cast<int>(sys.dim()), sys.kind == GbitKind::Rebit);
    const BlochState mixed_state = density_to_bloch(sys, mixed);
    // Purity bridge: tr(rho^2) = 2^-n (p^2 + |r|^2).
    const double bridged =
        (1.0 + information_total(mixed_state)) / static_cast<double>(sys.dim());
    if (std::abs(purity(mixed) - bridged) > 1e-9) ok = false;
    if ((classify(mixed_state) == InfoClassification::Pure) !=
        (std::abs(purity(mixed) - 1.0) <= 1e-9)) {
      ok = false;
    }
  }
  return make("information measure and purity bridge [" + tag(sys) + "]", ok,
              "100 random pure and mixed states");
}

CheckResult check_evolution(const SystemKind& sys, std::uint64_t seed) {
  std::mt19937_64 eng = stream_for(seed, 0xe0);
  const std::int64_t d = sys.complete_set_size();
  bool ok = true;
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    // Landscape variant on an in-ball state (|r| <= p keeps every rotated
    // image inside the probability box).
    Eigen::VectorXd r(d);
    for (Eigen::Index i = 0; i < d; ++i) r[i] = normal01(eng);
    r *= 0.9 / std::max(1.0, r.norm());
    const BlochState state(sys, ((r.array() + 1.0) / 2.0).matrix(), 1.0);

    Eigen::MatrixXd a(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
      for (Eigen::Index j = 0; j < d; ++j) a(i, j) = normal01(eng);
    }
    const LandscapeGenerator landscape((a - a.transpose()).eval());
    const double dt1 = 2.0 * uniform01(eng) - 1.0, dt2 = 2.0 * uniform01(eng) - 1.0;
    const BlochState evolved = evolve(state, landscape, dt1);
    worst = std::max(worst, std::abs(information_total(evolved) - information_total(state)));
    // Group law.
    const BlochState two_step = evolve(evolved, landscape, dt2);
    const BlochState one_step = evolve(state, landscape, dt1 + dt2);
    worst = std::max(worst, (two_step.y - one_step.y).cwiseAbs().maxCoeff());

    // Quantum variant on a random valid state.
    const BlochState qstate = density_to_bloch(
        sys, random_density(eng, static_cast<int>(sys.dim()), sys.kind == GbitKind::Rebit));
    Eigen::MatrixXcd h(sys.dim(), sys.dim());
    for (Eigen::Index i = 0; i < sys.dim(); ++i) {
      for (Eigen::Index j = 0; j < sys.dim(); ++j) {
        h(i, j) = std::complex<double>(normal01(eng), normal01(eng));
      }
    }
    if (sys.kind == GbitKind::Rebit) {
      Eigen::MatrixXd re = h.real();
      h = std::complex<double>(0, 1) * (re - re.transpose()).eval();
    } else {
      h = ((h + h.adjoint().eval()) / 2.0).eval();
    }
    const QuantumGenerator quantum(h);
    const BlochState qevolved = evolve(qstate, quantum, dt1);
    worst = std::max(worst, std::abs(information_total(qevolved) - information_total(qstate)));
    const BlochState qtwo = evolve(qevolved, quantum, dt2);
    const BlochState qone = evolve(qstate, quantum, dt1 + dt2);
    worst = std::max(worst, (qtwo.y - qone.y).cwiseAbs().maxCoeff());
  }
  ok = worst <= 1e-9;

  // Orthogonality of the induced Bloch map on a sampled unitary.
  Eigen::MatrixXcd h(sys.dim(), sys.dim());
  for (Eigen::Index i = 0; i < sys.dim(); ++i) {
    for (Eigen::Index j = 0; j < sys.dim(); ++j) {
      h(i, j) = std::complex<double>(normal01(eng), normal01(eng));
    }
  }
  if (sys.kind == GbitKind::Rebit) {
    Eigen::MatrixXd re = h.real();
    h = std::complex<double>(0, 1) * (re - re.transpose()).eval();
  } else {
    h = ((h + h.adjoint().eval()) / 2.0).eval();
  }
  const Eigen::MatrixXd t = induced_bloch_map(sys, unitary_exp(QuantumGenerator(h).h, 0.37));
  const double ortho =
      (t.transpose() * t - Eigen::MatrixXd::Identity(d, d)).cwiseAbs().maxCoeff();
  ok = ok && ortho <= 1e-8;

  std::ostringstream os;
  os << "conservation/group-law deviation " << worst << ", orthogonality " << ortho;
  return make("evolution conserves information [" + tag(sys) + "]", ok, os.str());
}

CheckResult check_mixing_and_homogeneity(const SystemKind& sys, std::uint64_t seed) {
  std::mt19937_64 eng = stream_for(seed, 0x77);
  bool ok = true;
  for (int t = 0; t < 100; ++t) {
    const BlochState s1 = density_to_bloch(
        sys, random_density(eng, static_cast<int>(sys.dim()), sys.kind == GbitKind::Rebit));
    const BlochState s2 = density_to_bloch(
        sys, random_density(eng, static_cast<int>(sys.dim()), sys.kind == GbitKind::Rebit));
    const double lambda = 0.05 + 0.9 * uniform01(eng);
    if ((s1.y - s2.y).cwiseAbs().maxCoeff() < 1e-9) continue;
    const BlochState mix = convex_mix(lambda, s1, s2);
    if (information_total(mix) >=
        std::max(information_total(s1), information_total(s2)) - 1e-12) {
      ok = false;
    }
    // Quadratic homogeneity: scaling the Bloch vector scales the information
    // by lambda^2.
    const Eigen::VectorXd scaled = lambda * s1.bloch_vector();
    const BlochState shrunk(sys, ((scaled.array() + s1.p) / 2.0).matrix(), s1.p);
    if (std::abs(information_total(shrunk) - lambda * lambda * information_total(s1)) >
        1e-12 * std::max(1.0, information_total(s1))) {
      ok = false;
    }
  }
  return make("mixing strictness and quadratic homogeneity [" + tag(sys) + "]", ok,
              "100 random pairs");
}

CheckResult check_monogamy(const SystemKind& sys, std::uint64_t seed) {
  // Combinatorial core: with the 110 and 220 correlations fixed, the only
  // complete-set questions with support on the third gbit compatible with
  // both are the individuals 00k and the diagonal 11k, 22k, 33k partners;
  // no bipartite correlation with the third gbit survives.
  const SystemKind three{sys.kind, 3};
  const QuestionIndex q110({1, 1, 0}), q220({2, 2, 0});
  const auto set = enumerate_complete_set(three);
  std::set<std::string> support_c;
  bool ok = true;
  for (const auto& q : set.members) {
    if (q[2] == 0) continue;
    if (is_compatible(q, q110) && is_compatible(q, q220)) {
      support_c.insert(q.str());
      if (q.weight() == 2) ok = false;  // a bare correlation with C would break monogamy
    }
  }
  // The diagonal patterns (d, d, k) that exist for the kind; nothing else.
  std::set<std::string> expected;
  for (int d = 0; d <= 3; ++d) {
    for (int k = 1; k <= 3; ++k) {
      const QuestionIndex q({d, d, k});
      if (q.is_valid_for(three)) expected.insert(q.str());
    }
  }
  ok = ok && support_c == expected;

  // Every surviving question adds only individual information about the
  // third gbit: it lies in the closure of {110, 220, 00k}.
  for (int k = 1; k <= 3; ++k) {
    const QuestionIndex individual({0, 0, k});
    if (!individual.is_valid_for(three)) continue;
    const auto closure = logical_closure(three, {{q110, +1}, {q220, +1}, {individual, +1}});
    std::set<std::string> closed;
    for (const auto& sq : closure) closed.insert(sq.index.str());
    for (const auto& name : support_c) {
      if (name.back() == static_cast<char>('0' + k) && !closed.count(name)) ok = false;
    }
  }

  // Tangle inequality with slack exactly the tripartite sum on random states.
  std::mt19937_64 eng = stream_for(seed, 0x3a);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const BlochState state = density_to_bloch(
        three, random_density(eng, static_cast<int>(three.dim()), sys.kind == GbitKind::Rebit));
    const Tangles tau = tangles(state);
    if (tau.tau_a_bc < tau.tau_ab + tau.tau_ac - 1e-12) ok = false;
    worst = std::max(
        worst, std::abs(tau.tau_a_bc - tau.tau_ab - tau.tau_ac - tau.three_tangle));
    if (tau.three_tangle < -1e-12) ok = false;
  }
  ok = ok && worst <= 1e-12;
  return make("monogamy structure and tangles [" + tag(sys) + "]", ok,
              std::to_string(support_c.size()) + " compatible third-gbit questions");
}

CheckResult check_ghz(const SystemKind& sys) {
  const SystemKind three{sys.kind, 3};
  const QuestionIndex a({2, 1, 1}), b({1, 2, 1}), c({1, 1, 2});
  bool ok = is_mutually_compatible({a, b, c}) && simultaneous_eigenbasis_exists(three, {a, b, c});
  const auto closure = logical_closure(three, {{a, +1}, {b, +1}, {c, +1}});
  ok = ok && closure.size() == 7;
  std::set<std::string> names;
  for (const auto& sq : closure) names.insert(sq.index.str());
  for (const char* want : {"330", "303", "033", "222"}) {
    if (!names.count(want)) ok = false;
  }
  return make("ghz closure [" + tag(sys) + "]", ok,
              std::to_string(closure.size()) + " members");
}

}  // namespace

std::vector<CheckResult> run_verification(std::optional<GbitKind> kind, int n_exhaustive,
                                          std::uint64_t seed) {
  if (n_exhaustive < 1) throw Error("run_verification: n must be >= 1");
  std::vector<GbitKind> kinds;
  if (kind) {
    kinds.push_back(*kind);
  } else {
    kinds = {GbitKind::Qubit, GbitKind::Rebit};
  }

  std::vector<CheckResult> results;
  for (GbitKind k : kinds) {
    results.push_back(check_counting(k));
    for (int n = 1; n <= std::min(n_exhaustive, 3); ++n) {
      const SystemKind sys{k, n};
      results.push_back(check_compat_oracle(sys));
      results.push_back(check_composition_signs(sys));
      if (n >= 2) results.push_back(check_associativity(sys));
      results.push_back(check_oracle_structure(sys));
    }
    for (int n = 4; n <= std::min(n_exhaustive, 5); ++n) {
      results.push_back(check_compat_oracle_sampled({k, n}, 10000, seed));
    }
    results.push_back(check_rebit_parity_closure(std::min(n_exhaustive, 3)));
    results.push_back(check_lattice({k, 2}));
    results.push_back(check_bell_relation({k, 2}));
    for (int n = 1; n <= std::min(n_exhaustive, 3); ++n) {
      const SystemKind sys{k, n};
      results.push_back(check_born_and_lueders(sys, seed));
      results.push_back(check_information_measure(sys, seed));
      results.push_back(check_evolution(sys, seed));
      results.push_back(check_mixing_and_homogeneity(sys, seed));
    }
    results.push_back(check_monogamy({k, 3}, seed));
    results.push_back(check_ghz({k, 3}));

    // Statistical self-tests of the interrogation rules.
    const SystemKind sim_sys{k, std::min(n_exhaustive, 2)};
    const AxiomReport report = validate_axioms(sim_sys, 2000, splitmix64(seed + 17));
    for (const auto& c : report.checks) {
      results.push_back(make("interrogation: " + c.name + " [" + tag(sim_sys) + "]", c.passed,
                             c.detail));
    }
  }
  results.push_back(check_frustration(seed));
  results.push_back(check_handedness());
  return results;
}

}  // namespace gbit
