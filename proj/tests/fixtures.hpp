#pragma once

#include <utility>
#include <vector>

#include "wdc/graph.hpp"

namespace fixture {

using wdc::EmbeddedGraph;

inline EmbeddedGraph k4() {
  const std::vector<std::pair<double, double>> pts{{0, 0}, {4, 0}, {2, 4}, {2, 1}};
  const std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}};
  return wdc::straight_line_embedding(pts, edges);
}

// Outer 4-cycle 0-1-2-3 with 4 adjacent to 0 and 2.
inline EmbeddedGraph k23() {
  const std::vector<std::pair<double, double>> pts{{0, 0}, {2, -2}, {4, 0}, {2, 2}, {2, 0}};
  const std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {2, 4}};
  return wdc::straight_line_embedding(pts, edges);
}

inline EmbeddedGraph path(int n) {
  std::vector<std::vector<int>> rot(n);
  for (int i = 0; i + 1 < n; ++i) {
    rot[i].push_back(i + 1);
    rot[i + 1].push_back(i);
  }
  return EmbeddedGraph(std::move(rot));
}

inline EmbeddedGraph edgeless(int n) { return EmbeddedGraph(std::vector<std::vector<int>>(n)); }

}  // namespace fixture
