#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wdc/graph.hpp"

namespace wdc {

// nullopt means unreachable (or infinite, for girth).
using Distance = std::optional<int>;

// Breadth-first distances from source; when `allowed` is given the search
// stays inside it.
std::vector<Distance> distances_from(const EmbeddedGraph& g, Vertex source,
                                     const std::vector<bool>* allowed = nullptr);

// Shortest cycle length; nullopt for forests.
std::optional<int> girth(const EmbeddedGraph& g);

// Maximum host-graph distance over pairs of the set.  Throws EmptySet.
Distance weak_diameter(const EmbeddedGraph& g, const std::vector<Vertex>& set);

// Maximum distance measured inside the subgraph induced by the set.
Distance internal_diameter(const EmbeddedGraph& g, const std::vector<Vertex>& set);

// Components of the color classes, each sorted, ordered by smallest member.
// Throws UncoloredVertex.
std::vector<std::vector<Vertex>> monochromatic_components(const EmbeddedGraph& g, const Coloring& phi);

struct VerifyMode {
  enum Kind { WeakDiameter, InternalDiameter, Clustering };
  Kind kind = WeakDiameter;
  int bound = 0;

  static VerifyMode weak(int ell) { return {WeakDiameter, ell}; }
  static VerifyMode internal(int ell) { return {InternalDiameter, ell}; }
  static VerifyMode clustering(int s) { return {Clustering, s}; }
};

struct ColoringReport {
  bool colored = true;          // every vertex carries a color
  bool lists_respected = true;  // vacuous without lists
  std::vector<Vertex> list_violations;
  std::vector<std::vector<Vertex>> components;
  std::vector<Distance> metric;  // per component
  Distance max_metric;           // nullopt if some metric is unbounded
  bool within_bound = true;
  bool pass = true;

  std::string summary() const;
};

ColoringReport verify_coloring(const EmbeddedGraph& g, const Coloring& phi, const ListAssignment* lists,
                               VerifyMode mode);

}  // namespace wdc
