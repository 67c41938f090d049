#pragma once

#include <vector>

#include "wdc/graph.hpp"

namespace wdc {

struct Face {
  int id = 0;
  std::vector<Dart> walk;
  int length = 0;
  // The boundary walk visits pairwise distinct vertices (a cycle of length >= 3).
  bool is_cycle = false;
  // Sorted, without repetition.
  std::vector<Vertex> vertices;
};

class FaceStructure {
 public:
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(int id) const { return faces_[id]; }
  int num_faces() const { return static_cast<int>(faces_.size()); }
  int face_of(const EmbeddedGraph& g, Dart d) const { return dart_face_[g.dart_index(d.from, d.to)]; }
  int face_of_dart_index(int index) const { return dart_face_[index]; }
  // Outer face of the component containing v, or -1 for isolated vertices.
  int outer_face_of(Vertex v) const { return outer_by_component_[component_[v]]; }
  bool is_outer(int face_id) const { return is_outer_[face_id]; }
  int component(Vertex v) const { return component_[v]; }
  // Faces around v, one per corner, in rotation order (may repeat).
  std::vector<int> faces_at(const EmbeddedGraph& g, Vertex v) const;

 private:
  friend FaceStructure trace_faces(const EmbeddedGraph& g);
  std::vector<Face> faces_;
  std::vector<int> dart_face_;
  std::vector<int> component_;
  std::vector<int> outer_by_component_;
  std::vector<bool> is_outer_;
};

// Throws EulerViolation when a component with at least one edge has
// V - E + F != 2.
FaceStructure trace_faces(const EmbeddedGraph& g);

// Vertex classification relative to a cycle k0 -> k1 -> ... -> k0.
struct CycleSides {
  enum Side : signed char { Elsewhere = -1, OnCycle = 0, Left = 1, Right = 2 };
  std::vector<Side> side;
  bool outer_on_left = false;
};

// The left side of k_i -> k_{i+1} at k_i is the range strictly between
// k_{i+1} and k_{i-1} in counterclockwise order.
CycleSides cycle_sides(const EmbeddedGraph& g, const FaceStructure& fs, const std::vector<Vertex>& cycle);

// Sorted vertices strictly inside the cycle (the side away from the outer face).
std::vector<Vertex> cycle_interior(const EmbeddedGraph& g, const FaceStructure& fs,
                                   const std::vector<Vertex>& cycle);

// Same vertex set, traversed so that the interior is on the left; k0 is kept.
std::vector<Vertex> orient_interior_left(const EmbeddedGraph& g, const FaceStructure& fs,
                                         const std::vector<Vertex>& cycle);

// Both sides contain vertices.
bool is_separating_cycle(const EmbeddedGraph& g, const FaceStructure& fs, const std::vector<Vertex>& cycle);

struct Subgraph {
  EmbeddedGraph graph;
  std::vector<Vertex> to_parent;
  std::vector<int> from_parent;  // -1 if dropped
};

// Induced subgraph on the kept vertices, relabelled in increasing parent
// order.  The outer face follows the region that contained the old one.
Subgraph induced_subgraph(const EmbeddedGraph& g, const std::vector<bool>& keep);
Subgraph induced_subgraph(const EmbeddedGraph& g, const std::vector<Vertex>& keep);

// The cycle together with everything inside it; chords outside are dropped.
// The cycle bounds the outer face of the result.
Subgraph disk_subgraph(const EmbeddedGraph& g, const FaceStructure& fs, const std::vector<Vertex>& cycle);

std::vector<std::vector<Vertex>> connected_components(const EmbeddedGraph& g);

}  // namespace wdc
