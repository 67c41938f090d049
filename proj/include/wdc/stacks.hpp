#pragma once

#include <optional>
#include <vector>

#include "wdc/faces.hpp"
#include "wdc/graph.hpp"

namespace wdc {

// Leaf: a bare t-cycle.  Node: the apex of K4 (t = 3) or the centre of
// K_{2,3} (t = 4) plus one child per inner face of that base.
struct StackDecomposition {
  std::vector<Vertex> cycle;  // interior on the left
  std::optional<Vertex> apex;
  std::vector<StackDecomposition> children;

  bool is_leaf() const { return !apex; }
  int depth() const;
  int node_count() const;
};

// Vertices of the outer face boundary of a connected graph, in walk order.
// Throws NotAStack if that boundary is not a cycle.
std::vector<Vertex> outer_cycle(const EmbeddedGraph& g, const FaceStructure& fs);

// outer_cycle bounds the outer face and has length t.  Throws NotAStack
// naming the cycle where recognition failed.
StackDecomposition recognize_stack(const EmbeddedGraph& g, const std::vector<Vertex>& outer_cycle, int t);

// Every vertex off the cycle with two neighbours on it is adjacent to v.
bool is_active(const EmbeddedGraph& g, const std::vector<Vertex>& cycle, Vertex v);

// Extends psi (colouring the triangle `cycle`) to the 3-stack g using lists
// of size 3.  Result: weak diameter <= 2, the other two cycle vertices are
// singletons, u's component lies in their closed neighbourhoods, and u is a
// singleton too when psi uses at most two colours.
Coloring color_3stack(const EmbeddedGraph& g, const std::vector<Vertex>& cycle, Vertex u, const ListAssignment& lists,
                      const Coloring& psi);

// Extends psi (colouring the 4-cycle `cycle`) to the 4-stack g using lists
// of size 2, for an active cycle vertex v.  Result: weak diameter <= 4,
// psi-opaque and v-compliant.  Throws NotActive.
Coloring color_4stack(const EmbeddedGraph& g, const std::vector<Vertex>& cycle, Vertex v, const ListAssignment& lists,
                      const Coloring& psi);

struct ComplianceReport {
  // No monochromatic component meets two monochromatic components of the
  // colouring restricted to the cycle.
  bool psi_opaque = false;
  // Components meeting both the cycle and the rest of the graph.
  int transversal = 0;
  // The three conditions on the unique transversal component (vacuously true
  // when there is none, false when there are several).
  bool contains_v = false;
  bool v_differs_from_opposite = false;
  bool off_cycle_members_see_uncovered_cycle = false;
  bool v_compliant = false;
  bool active = false;
  std::vector<bool> singleton;  // parallel to the cycle
};

// v is optional for 3-cycles; the v-specific fields are then false.
ComplianceReport compliance_checks(const EmbeddedGraph& g, const std::vector<Vertex>& cycle, const Coloring& phi,
                                   std::optional<Vertex> v);

// The component of `u` is inside N[w] for every other cycle vertex w.
bool component_in_closed_neighbourhoods(const EmbeddedGraph& g, const std::vector<Vertex>& cycle, const Coloring& phi,
                                        Vertex u);

}  // namespace wdc
