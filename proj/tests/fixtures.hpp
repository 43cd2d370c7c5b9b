#pragma once

#include <vector>

#include "burnkit/graph.hpp"

namespace burnkit::fixtures {

// The 8-vertex HIT drawn next to P4 and the Petersen graph in the classic
// burning-number figure, relabeled 1..8 -> 0..7.
inline Tree fig1_hit() {
  std::vector<Edge> edges{{0, 1}, {1, 2}, {1, 3}, {3, 4}, {3, 5}, {5, 6}, {5, 7}};
  return Tree(8, edges);
}

inline Tree path_tree(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Tree(n, edges);
}

inline Tree star_tree(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Tree(n, edges);
}

}  // namespace burnkit::fixtures
