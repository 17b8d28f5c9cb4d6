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

#include "gbit/algebra.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace gbit {

namespace {

void check_same_n(const QuestionIndex& q1, const QuestionIndex& q2) {
  if (q1.n() != q2.n()) {
    throw Error("questions " + q1.str() + " and " + q2.str() + " have different site counts");
  }
}

// Pauli axes. Question indices map onto axes per system kind:
// qubit 1,2,3 -> x,y,z; rebit 1,2 -> x,z and paired 3s -> y.
enum Axis : int { AxisX = 0, AxisY = 1, AxisZ = 2 };

Axis axis_of(const SystemKind& sys, int index) {
  static constexpr Axis kQubit[3] = {AxisX, AxisY, AxisZ};
  static constexpr Axis kRebit[3] = {AxisX, AxisZ, AxisY};
  return sys.kind == GbitKind::Qubit ? kQubit[index - 1] : kRebit[index - 1];
}

// sigma_a sigma_b = i^phase sigma_c for distinct axes a, b; phase is 1 for a
// cyclic (x,y), (y,z), (z,x) pair and 3 (i.e. -i) otherwise.
int single_site_phase(Axis a, Axis b) {
  const bool cyclic = (b - a + 3) % 3 == 1;
  return cyclic ? 1 : 3;
}

}  // namespace

bool is_compatible(const QuestionIndex& q1, const QuestionIndex& q2) {
  check_same_n(q1, q2);
  int disagreements = 0;
  for (int a = 0; a < q1.n(); ++a) {
    if (q1[a] != 0 && q2[a] != 0 && q1[a] != q2[a]) ++disagreements;
  }
  return disagreements % 2 == 0;
}

bool is_complementary(const QuestionIndex& q1, const QuestionIndex& q2) {
  return q1 != q2 && !is_compatible(q1, q2);
}

bool is_mutually_compatible(const std::vector<QuestionIndex>& qs) {
  for (std::size_t i = 0; i < qs.size(); ++i) {
    for (std::size_t j = i + 1; j < qs.size(); ++j) {
      if (!is_compatible(qs[i], qs[j])) return false;
    }
  }
  return true;
}

std::optional<QuestionIndex> compose_index(const QuestionIndex& q1, const QuestionIndex& q2) {
  check_same_n(q1, q2);
  std::vector<std::uint8_t> out(q1.n());
  bool all_zero = true;
  for (int a = 0; a < q1.n(); ++a) {
    const int u = q1[a], v = q2[a];
    int w;
    if (u == v) {
      w = 0;
    } else if (u == 0 || v == 0) {
      w = u + v;
    } else {
      w = 6 - u - v;
    }
    out[a] = static_cast<std::uint8_t>(w);
    if (w != 0) all_zero = false;
  }
  if (all_zero) return std::nullopt;
  return QuestionIndex(std::move(out));
}

int composition_parity(const SystemKind& sys, const QuestionIndex& q1, const QuestionIndex& q2) {
  q1.require_valid_for(sys);
  q2.require_valid_for(sys);
  int phase = 0;  // power of i mod 4
  for (int a = 0; a < q1.n(); ++a) {
    const int u = q1[a], v = q2[a];
    if (u == 0 || v == 0 || u == v) continue;
    phase = (phase + single_site_phase(axis_of(sys, u), axis_of(sys, v))) % 4;
  }
  if (phase == 1 || phase == 3) {
    throw CompositionUndefined("parity of complementary pair " + q1.str() + ", " + q2.str() +
                               " is imaginary");
  }
  return phase == 0 ? +1 : -1;
}

XnorResult xnor_compose(const SystemKind& sys, const SignedQuestion& s1,
                        const SignedQuestion& s2) {
  if (!is_compatible(s1.index, s2.index)) {
    throw CompositionUndefined("cannot connect complementary questions " + s1.index.str() +
                               " and " + s2.index.str());
  }
  const int sign = s1.sign * s2.sign * composition_parity(sys, s1.index, s2.index);
  auto idx = compose_index(s1.index, s2.index);
  if (!idx) return sign > 0 ? Truth::Always : Truth::Never;
  return SignedQuestion(std::move(*idx), sign);
}

namespace {

void enumerate_rec(const SystemKind& sys, std::vector<std::uint8_t>& tuple, int site,
                   std::vector<QuestionIndex>& out) {
  if (site == sys.n) {
    bool all_zero = std::all_of(tuple.begin(), tuple.end(),
                                [](std::uint8_t v) { return v == 0; });
    if (all_zero) return;
    QuestionIndex q(tuple);
    if (q.is_valid_for(sys)) out.push_back(std::move(q));
    return;
  }
  for (std::uint8_t v = 0; v <= 3; ++v) {
    tuple[site] = v;
    enumerate_rec(sys, tuple, site + 1, out);
  }
  tuple[site] = 0;
}

}  // namespace

QuestionSet enumerate_complete_set(const SystemKind& sys) {
  QuestionSet set;
  set.kind = sys;
  set.members.reserve(static_cast<std::size_t>(sys.complete_set_size()));
  std::vector<std::uint8_t> tuple(sys.n, 0);
  enumerate_rec(sys, tuple, 0, set.members);
  return set;
}

std::int64_t complete_set_position(const SystemKind& sys, const QuestionIndex& q) {
  q.require_valid_for(sys);
  if (sys.kind == GbitKind::Qubit) {
    // Base-4 value of the tuple, shifted down by one for the skipped all-zero
    // tuple.
    std::int64_t value = 0;
    for (int a = 0; a < q.n(); ++a) value = value * 4 + q[a];
    return value - 1;
  }
  // Rebit: count valid tuples strictly below q. Track, digit by digit, the
  // number of valid completions with even/odd 3-parity.
  std::int64_t below = 0;
  int parity_so_far = 0;
  for (int a = 0; a < q.n(); ++a) {
    const int remaining = q.n() - a - 1;
    // even[k]/odd[k]: completions of k free digits with even/odd 3-count:
    // even = (4^k + 2^k)/2, odd = (4^k - 2^k)/2.
    const std::int64_t p4 = std::int64_t(1) << (2 * remaining);
    const std::int64_t p2 = std::int64_t(1) << remaining;
    const std::int64_t even = (p4 + p2) / 2, odd = (p4 - p2) / 2;
    for (int v = 0; v < q[a]; ++v) {
      const int parity = (parity_so_far + (v == 3 ? 1 : 0)) % 2;
      below += parity == 0 ? even : odd;
    }
    if (q[a] == 3) parity_so_far ^= 1;
  }
  return below - 1;  // all-zero tuple is not a member
}

std::vector<SignedQuestion> logical_closure(const SystemKind& sys,
                                            const std::vector<SignedQuestion>& gens) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    gens[i].index.require_valid_for(sys);
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!is_compatible(gens[i].index, gens[j].index)) {
        throw CompositionUndefined("generators " + gens[i].index.str() + " and " +
                                   gens[j].index.str() + " are complementary");
      }
    }
  }

  std::map<QuestionIndex, int> signs;
  std::deque<QuestionIndex> frontier;
  for (const auto& g : gens) {
    auto [it, inserted] = signs.emplace(g.index, g.sign);
    if (!inserted && it->second != g.sign) {
      throw Error("generators assign contradictory signs to " + g.index.str());
    }
    if (inserted) frontier.push_back(g.index);
  }

  while (!frontier.empty()) {
    const QuestionIndex q = frontier.front();
    frontier.pop_front();
    // Compose the new member with every known member; the closure is a group,
    // so this reaches all products of the generators.
    const std::vector<std::pair<QuestionIndex, int>> snapshot(signs.begin(), signs.end());
    for (const auto& [other, other_sign] : snapshot) {
      if (other == q) continue;
      XnorResult r = xnor_compose(sys, SignedQuestion(q, signs.at(q)),
                                  SignedQuestion(other, other_sign));
      if (is_tautology(r)) {
        if (std::get<Truth>(r) == Truth::Never) {
          throw Error("closure is contradictory at " + q.str());
        }
        continue;
      }
      const SignedQuestion& sq = as_question(r);
      auto [it, inserted] = signs.emplace(sq.index, sq.sign);
      if (!inserted && it->second != sq.sign) {
        throw Error("closure assigns contradictory signs to " + sq.index.str());
      }
      if (inserted) frontier.push_back(sq.index);
    }
  }

  std::vector<SignedQuestion> out;
  out.reserve(signs.size());
  for (const auto& [q, s] : signs) out.emplace_back(q, s);
  return out;
}

}  // namespace gbit
