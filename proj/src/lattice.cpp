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

#include "gbit/lattice.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "gbit/algebra.hpp"

namespace gbit {

int QuestionGraph::degree(int vertex) const {
  int d = 0;
  for (const auto& e : edges) {
    if (e.a == vertex || e.b == vertex) ++d;
  }
  return d;
}

int QuestionGraph::triangle_count(int vertex) const {
  int t = 0;
  for (const auto& tri : triangles) {
    if (tri.a == vertex || tri.b == vertex || tri.c == vertex) ++t;
  }
  return t;
}

QuestionGraph build_lattice(const SystemKind& sys) {
  QuestionGraph graph;
  graph.sys = sys;
  graph.vertices = enumerate_complete_set(sys).members;

  std::map<QuestionIndex, int> position;
  for (std::size_t i = 0; i < graph.vertices.size(); ++i) {
    position.emplace(graph.vertices[i], static_cast<int>(i));
  }

  const int count = static_cast<int>(graph.vertices.size());
  std::set<std::array<int, 3>> seen;
  for (int a = 0; a < count; ++a) {
    for (int b = a + 1; b < count; ++b) {
      if (!is_compatible(graph.vertices[a], graph.vertices[b])) continue;
      graph.edges.push_back({a, b});
      // The third member of the triangle through this edge is the XNOR
      // composition of its endpoints.
      auto third = compose_index(graph.vertices[a], graph.vertices[b]);
      if (!third) continue;
      auto it = position.find(*third);
      if (it == position.end()) continue;  // cannot happen for a closed set
      std::array<int, 3> tri{a, b, it->second};
      std::sort(tri.begin(), tri.end());
      if (!seen.insert(tri).second) continue;
      const int parity = composition_parity(sys, graph.vertices[a], graph.vertices[b]);
      graph.triangles.push_back({tri[0], tri[1], tri[2],
                                 parity > 0 ? Parity::Even : Parity::Odd});
    }
  }
  std::sort(graph.triangles.begin(), graph.triangles.end(),
            [](const QuestionGraph::Triangle& x, const QuestionGraph::Triangle& y) {
              return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
            });
  return graph;
}

std::string to_dot(const QuestionGraph& graph) {
  std::ostringstream os;
  os << "graph question_lattice {\n";
  os << "  // kind=" << to_string(graph.sys.kind) << " n=" << graph.sys.n
     << " vertices=" << graph.vertices.size() << " edges=" << graph.edges.size()
     << " triangles=" << graph.triangles.size() << "\n";
  os << "  node [shape=circle];\n";
  for (const auto& v : graph.vertices) {
    os << "  \"" << v.str() << "\";\n";
  }

  // Triangles as colored subgraphs; edges covered by a triangle are emitted
  // inside it, remaining compatibility edges afterwards.
  std::set<std::pair<int, int>> covered;
  int tri_id = 0;
  for (const auto& t : graph.triangles) {
    const char* color = t.parity == Parity::Odd ? "red" : "green";
    os << "  subgraph triangle_" << tri_id++ << " {\n";
    os << "    edge [color=" << color << "];\n";
    const std::pair<int, int> sides[3] = {{t.a, t.b}, {t.a, t.c}, {t.b, t.c}};
    for (const auto& [x, y] : sides) {
      os << "    \"" << graph.vertices[x].str() << "\" -- \"" << graph.vertices[y].str()
         << "\";\n";
      covered.emplace(x, y);
    }
    os << "  }\n";
  }
  for (const auto& e : graph.edges) {
    if (covered.count({e.a, e.b})) continue;
    os << "  \"" << graph.vertices[e.a].str() << "\" -- \"" << graph.vertices[e.b].str()
       << "\";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace gbit
