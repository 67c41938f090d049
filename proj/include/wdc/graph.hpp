#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace wdc {

using Vertex = int;
// Colors are opaque non-negative tokens; the library only ever compares them.
using Color = int;

struct Dart {
  Vertex from = 0;
  Vertex to = 0;
  auto operator<=>(const Dart&) const = default;
};

// A simple plane graph given by its rotation system.
//
// rotation(v) lists the neighbours of v in counterclockwise order around v.
// Faces are traced with the face on the left of every dart: the dart after
// u->v is v->w where w precedes u in rotation(v).  The optional outer marker
// is a dart of the outer face; components that do not contain it fall back to
// the default outer face (longest boundary, smallest incident vertex id).
class EmbeddedGraph {
 public:
  EmbeddedGraph() = default;
  explicit EmbeddedGraph(std::vector<std::vector<Vertex>> rotations,
                         std::optional<Dart> outer_marker = std::nullopt);

  int num_vertices() const { return static_cast<int>(rot_.size()); }
  int num_edges() const { return num_edges_; }
  int degree(Vertex v) const { return static_cast<int>(rot_[v].size()); }
  const std::vector<Vertex>& rotation(Vertex v) const { return rot_[v]; }
  const std::vector<std::vector<Vertex>>& rotations() const { return rot_; }

  bool adjacent(Vertex u, Vertex v) const { return position(u, v) >= 0; }
  // Index of w in rotation(v), or -1.
  int position(Vertex v, Vertex w) const;
  Vertex successor(Vertex v, Vertex w) const;
  Vertex predecessor(Vertex v, Vertex w) const;

  std::optional<Dart> outer_marker() const { return outer_; }

  // Edges as (u, v) with u < v, sorted.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  // Offset of the darts leaving v in the global dart numbering.
  int dart_offset(Vertex v) const { return offsets_[v]; }
  int num_darts() const { return 2 * num_edges_; }
  int dart_index(Vertex from, Vertex to) const;
  Dart dart(int index) const;

  bool operator==(const EmbeddedGraph& other) const {
    return rot_ == other.rot_ && outer_ == other.outer_;
  }

 private:
  std::vector<std::vector<Vertex>> rot_;
  // Per vertex: (neighbour, index in rotation), sorted by neighbour.
  std::vector<std::vector<std::pair<Vertex, int>>> lookup_;
  std::vector<int> offsets_;
  std::optional<Dart> outer_;
  int num_edges_ = 0;
};

// Partial or total assignment of colors to the vertices 0..n-1.
class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(int n) : colors_(static_cast<std::size_t>(n)) {}
  explicit Coloring(std::vector<std::optional<Color>> colors) : colors_(std::move(colors)) {}

  int size() const { return static_cast<int>(colors_.size()); }
  bool has(Vertex v) const { return colors_[v].has_value(); }
  Color operator[](Vertex v) const { return *colors_[v]; }
  const std::optional<Color>& get(Vertex v) const { return colors_[v]; }
  void set(Vertex v, Color c) { colors_[v] = c; }
  void clear(Vertex v) { colors_[v].reset(); }
  bool complete() const;

  bool operator==(const Coloring&) const = default;

 private:
  std::vector<std::optional<Color>> colors_;
};

// Sorted, duplicate-free color list per vertex.
using ColorList = std::vector<Color>;
using ListAssignment = std::vector<ColorList>;

// {first, ..., first + k - 1} for every vertex.
ListAssignment uniform_lists(int n, int k, Color first = 1);

// Keeps the c smallest colors of each list; throws PreconditionViolated if a
// list is shorter than c.
ListAssignment truncate_lists(const ListAssignment& lists, int c);

bool list_contains(const ColorList& list, Color c);

// Connected component index per vertex, numbered by smallest member.
std::vector<int> component_ids(const EmbeddedGraph& g, int* count = nullptr);

// Straight-line drawing: rotations come from sorting neighbour directions by
// angle, and the outer marker is the dart from the lowest (then leftmost)
// vertex to its last neighbour.
EmbeddedGraph straight_line_embedding(std::span<const std::pair<double, double>> points,
                                      std::span<const std::pair<Vertex, Vertex>> edges);

}  // namespace wdc
