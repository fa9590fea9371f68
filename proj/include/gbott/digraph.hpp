#pragma once

#include <string>
#include <vector>

#include "gbott/model.hpp"

namespace gbott {

// Multidigraph on one vertex per block: n_i label-1 loops at vertex i, and
// for each ordered pair i != j one edge i -> j per column of block j carrying
// that column's entry of row i.
struct LabeledDigraph {
  struct Edge {
    int from = 0;    // 0-based vertex
    int to = 0;
    int column = 1;  // 1-based within the target block
    int label = 0;
    bool operator==(const Edge&) const = default;
  };
  int vertices = 0;
  std::vector<Edge> edges;  // sorted by (from, to, column)
  bool operator==(const LabeledDigraph&) const = default;
};

inline LabeledDigraph build_digraph(const VectorMatrix& A) {
  const Dims& d = A.dims();
  LabeledDigraph g;
  g.vertices = d.k();
  for (int i = 0; i < d.k(); ++i)
    for (int j = 0; j < d.k(); ++j)
      for (int l = 1; l <= d.part(j); ++l)
        g.edges.push_back({i, j, l, i == j ? 1 : A.a(i, j, l - 1)});
  return g;
}

inline bool orientable_via_digraph(const LabeledDigraph& g) {
  std::vector<int> out(g.vertices, 0);
  for (const auto& e : g.edges) out[e.from] += e.label;
  for (int deg : out)
    if (deg % 2 == 0) return false;
  return true;
}

inline std::string to_dot(const LabeledDigraph& g) {
  std::string s = "digraph tower {\n";
  for (int v = 0; v < g.vertices; ++v)
    s += "  w" + std::to_string(v + 1) + ";\n";
  for (const auto& e : g.edges) {
    s += "  w" + std::to_string(e.from + 1) + " -> w" +
         std::to_string(e.to + 1) + " [label=" + std::to_string(e.label);
    if (e.label == 0) s += ", style=dotted";
    s += "];\n";
  }
  s += "}\n";
  return s;
}

}  // namespace gbott
