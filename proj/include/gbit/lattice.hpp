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

#include <string>
#include <vector>

#include "gbit/gf2.hpp"
#include "gbit/types.hpp"

namespace gbit {

/// The compatibility graph of the complete question set: vertices are
/// questions, edges join compatible pairs, and XNOR-closed triples form
/// triangles labeled by their correlation parity (even: Q = Q' <-> Q'',
/// odd: Q = not(Q' <-> Q'')).
struct QuestionGraph {
  SystemKind sys;
  std::vector<QuestionIndex> vertices;  // lexicographic

  struct Edge {
    int a = 0, b = 0;  // a < b, indices into vertices
  };
  std::vector<Edge> edges;

  struct Triangle {
    int a = 0, b = 0, c = 0;  // a < b < c
    Parity parity = Parity::Even;
  };
  std::vector<Triangle> triangles;

  int degree(int vertex) const;            // compatible neighbours
  int triangle_count(int vertex) const;    // triangles through the vertex
};

/// Builds the full lattice for the system: all compatibility edges plus all
/// XNOR-closed triangles with parity labels. Deterministic ordering
/// throughout.
QuestionGraph build_lattice(const SystemKind& sys);

/// Graphviz rendering; triangles become subgraphs whose color attribute
/// encodes the parity (odd=red, even=green). Byte-stable across runs.
std::string to_dot(const QuestionGraph& graph);

}  // namespace gbit
