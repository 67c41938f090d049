#pragma once

#include <optional>
#include <vector>

#include "wdc/faces.hpp"
#include "wdc/graph.hpp"
#include "wdc/islands.hpp"
#include "wdc/metrics.hpp"

namespace wdc {

// Weak-diameter bounds along the construction, starting from the island
// clustering s.
struct BoundTracker {
  int s = kDefaultIslandSize;
  int p = 4;

  // Islands of at most s vertices, then the sparsifier extension.
  int ell_prime() const { return s - 1 + 8; }
  // Separating short cycles on top of that.
  int ell() const { return 2 * ell_prime() + 22; }
};

struct SeparatingCycle {
  std::vector<Vertex> cycle;     // interior on the left
  std::vector<Vertex> interior;  // sorted
  // No other separating cycle has an interior strictly containing this one.
  bool maximal = false;
  // Maximal, and chosen greedily (largest interior first) with interiors
  // disjoint from the cycles chosen before.
  bool selected = false;
};

// All t-cycles with vertices on both sides, ordered by interior size, then
// by sorted vertex set.
std::vector<SeparatingCycle> find_separating_t_cycles(const EmbeddedGraph& g, const FaceStructure& fs, int t);
std::vector<SeparatingCycle> find_separating_t_cycles(const EmbeddedGraph& g, int t);

// Every vertex off the cycle has fewer than c neighbours on it.
bool is_c_solitary(const EmbeddedGraph& g, const std::vector<Vertex>& cycle, int c);

// Counters filled along the way, for reports.
struct PipelineStats {
  int solitary_splits = 0;  // separating cycles handled by recursion on both sides
  int stacks = 0;           // disks colored as stacks
  int appearances = 0;      // sparsifier images across all core colorings
  int largest_island = 0;
};

// g has girth >= t and no separating t-cycles.  Colors through a maximal
// sparsifier system and islands of the residual.  The result has weak
// diameter at most tracker.ell_prime().
Coloring color_no_short_separating(const EmbeddedGraph& g, const ListAssignment& lists, int c,
                                   const BoundTracker& tracker = {}, PipelineStats* stats = nullptr);

struct Precoloring {
  std::vector<Vertex> cycle;  // bounds the outer face
  Coloring psi;               // colors the cycle
};

// Colors a plane graph of girth >= t.  With a precoloring, the cycle keeps
// its colors and no edge leaving it is monochromatic.
Coloring color_planar(const EmbeddedGraph& g, const ListAssignment& lists, int c,
                      const std::optional<Precoloring>& precolored = std::nullopt, const BoundTracker& tracker = {},
                      PipelineStats* stats = nullptr);

struct MainResult {
  Coloring coloring;
  BoundTracker tracker;
  int bound = 0;                 // tracker.ell()
  Distance max_weak_diameter;    // measured
  ColoringReport report;         // verify_coloring at the bound, lists enforced
  PipelineStats stats;
};

// Entry point: c = 2 needs a triangle-free graph (GirthViolation otherwise).
// Lists are cut to their c smallest colors; every component is colored on
// its own and the union is verified.
MainResult color_main(const EmbeddedGraph& g, const ListAssignment& lists, int c, const BoundTracker& tracker = {});

}  // namespace wdc
