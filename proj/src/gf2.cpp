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

#include "gbit/gf2.hpp"

#include <algorithm>

namespace gbit {

FrustrationOutcome frustration_check(int num_vars,
                                     const std::vector<Gf2Constraint>& constraints) {
  if (num_vars < 0) throw Error("frustration_check: negative variable count");

  struct Row {
    std::vector<std::uint8_t> coeff;  // GF(2) coefficients
    int rhs = 0;
    std::vector<std::uint8_t> origin;  // combination of input constraints
  };

  std::vector<Row> rows;
  rows.reserve(constraints.size());
  for (std::size_t c = 0; c < constraints.size(); ++c) {
    const auto& con = constraints[c];
    if (con.rhs != 0 && con.rhs != 1) throw Error("frustration_check: rhs must be 0 or 1");
    Row row;
    row.coeff.assign(num_vars, 0);
    row.rhs = con.rhs;
    row.origin.assign(constraints.size(), 0);
    row.origin[c] = 1;
    for (int v : con.vars) {
      if (v < 0 || v >= num_vars) {
        throw Error("frustration_check: variable id " + std::to_string(v) + " out of range");
      }
      row.coeff[v] ^= 1;  // repeated variables cancel
    }
    rows.push_back(std::move(row));
  }

  // Gaussian elimination, tracking which input constraints combine into each
  // reduced row so a 0 = 1 row yields an inconsistency certificate.
  std::vector<int> pivot_of_row;
  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (int col = 0; col < num_vars && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot].coeff[col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r].coeff[col] == 0) continue;
      for (int k = 0; k < num_vars; ++k) rows[r].coeff[k] ^= rows[rank].coeff[k];
      rows[r].rhs ^= rows[rank].rhs;
      for (std::size_t k = 0; k < rows[r].origin.size(); ++k) {
        rows[r].origin[k] ^= rows[rank].origin[k];
      }
    }
    pivot_col.push_back(col);
    ++rank;
  }

  FrustrationOutcome out;
  for (std::size_t r = rank; r < rows.size(); ++r) {
    if (rows[r].rhs == 1) {
      out.satisfiable = false;
      for (std::size_t k = 0; k < rows[r].origin.size(); ++k) {
        if (rows[r].origin[k]) out.inconsistent.push_back(static_cast<int>(k));
      }
      return out;
    }
  }

  out.satisfiable = true;
  out.witness.assign(num_vars, 0);
  for (std::size_t r = 0; r < rank; ++r) {
    out.witness[pivot_col[r]] = static_cast<std::uint8_t>(rows[r].rhs);
  }
  return out;
}

std::pair<int, std::vector<Gf2Constraint>> individuals_encoding(
    const SystemKind& sys, const std::vector<QuestionConstraint>& constraints) {
  const int num_vars = 3 * sys.n;
  std::vector<Gf2Constraint> system;
  system.reserve(constraints.size());
  for (const auto& qc : constraints) {
    if (qc.questions.empty()) throw Error("individuals_encoding: empty question list");
    Gf2Constraint con;
    int total_terms = 0;
    for (const auto& q : qc.questions) {
      q.require_valid_for(sys);
      for (int a = 0; a < q.n(); ++a) {
        if (q[a] == 0) continue;
        con.vars.push_back(3 * a + q[a] - 1);
        ++total_terms;
      }
    }
    // An XNOR chain over m terms evaluates to x1 ^ ... ^ xm ^ (m - 1 mod 2).
    con.rhs = (qc.value ? 1 : 0) ^ ((total_terms - 1) % 2);
    system.push_back(std::move(con));
  }
  return {num_vars, system};
}

bool handedness_consistency(int num_gbits,
                            const std::map<std::pair<int, int>, Parity>& pair_parities) {
  if (num_gbits < 3) throw Error("handedness_consistency: need at least three gbits");
  auto parity_at = [&](int a, int b) {
    auto it = pair_parities.find({std::min(a, b), std::max(a, b)});
    if (it == pair_parities.end()) {
      throw Error("handedness_consistency: missing parity for pair (" + std::to_string(a) +
                  "," + std::to_string(b) + ")");
    }
    return it->second;
  };
  for (int a = 0; a < num_gbits; ++a) {
    for (int b = a + 1; b < num_gbits; ++b) {
      for (int c = b + 1; c < num_gbits; ++c) {
        int odd = 0;
        if (parity_at(a, b) == Parity::Odd) ++odd;
        if (parity_at(a, c) == Parity::Odd) ++odd;
        if (parity_at(b, c) == Parity::Odd) ++odd;
        if (odd % 2 == 0) return false;
      }
    }
  }
  return true;
}

}  // namespace gbit
