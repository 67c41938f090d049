#pragma once

#include <optional>
#include <vector>

#include "wdc/graph.hpp"
#include "wdc/rational.hpp"

namespace wdc {

inline constexpr int kDefaultIslandSize = 20;

// A vertex set in which every member has fewer than c neighbours outside.
struct Island {
  std::vector<Vertex> members;        // sorted
  std::vector<int> boundary_degrees;  // parallel to members
};

// Smallest c-island with at most s_max vertices (ties: lexicographically by
// the search order from the smallest seed).  `alive` restricts the search to
// an induced subgraph.  nullopt if none exists within the size bound.
std::optional<Island> find_c_island(const EmbeddedGraph& g, int c, int s_max,
                                    const std::vector<bool>* alive = nullptr);

bool is_c_island(const EmbeddedGraph& g, int c, const std::vector<Vertex>& members,
                 const std::vector<bool>* alive = nullptr);

struct IslandColoring {
  Coloring coloring;
  std::vector<Island> islands;  // in peeling order
  int largest_island = 0;
};

// Peels islands until nothing is left, then colors them in reverse so that
// every vertex avoids the colors of its neighbours in later islands.  Each
// monochromatic component stays inside one island.  Lists need at least c
// colors.  Throws IslandSearchFailed when a residual graph has no island.
IslandColoring island_coloring(const EmbeddedGraph& g, const ListAssignment& lists, int c,
                               int s_max = kDefaultIslandSize);

// |E| <= a |V| + b, exactly.
bool sparsity_check(const EmbeddedGraph& g, const Rational& a, const Rational& b);

}  // namespace wdc
