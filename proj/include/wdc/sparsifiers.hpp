#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "wdc/faces.hpp"
#include "wdc/graph.hpp"

namespace wdc {

enum class SparsifierId { S1_c2, S2_c2, S1_c3, S2_c3 };

std::string_view to_string(SparsifierId id);

// Small pattern graph with a capacity per vertex.
struct Sparsifier {
  SparsifierId id;
  int c;
  int size;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> gamma;
  std::array<std::array<bool, 4>, 4> adjacency{};
  std::array<int, 4> degrees{};

  bool adjacent(int a, int b) const { return adjacency[a][b]; }
  int degree(int a) const { return degrees[a]; }
};

// S1_c2: one vertex, capacity 3.   S2_c2: 4-cycle 0-1-2-3, capacity 4.
// S1_c3: one vertex, capacity 5.   S2_c3: the same 4-cycle plus chord 0-2, capacity 6.
const Sparsifier& sparsifier(SparsifierId id);
std::vector<SparsifierId> sparsifiers_for(int c);

// Sorted multiset of colors per pattern vertex.
using Multiset = std::vector<Color>;
using MultiAssignment = std::vector<Multiset>;

// Colors the pattern from lists of size exactly c so that the result is
// opaque with respect to b.  Free choices take the smallest color.
// Throws PreconditionViolated when a list has the wrong size or some b[v]
// exceeds gamma(v) - deg(v).
std::vector<Color> color_sparsifier(SparsifierId id, const ListAssignment& lists, const MultiAssignment& b);
// Same, writing into phi (resized to the pattern size).
void color_sparsifier_into(SparsifierId id, const ListAssignment& lists, const MultiAssignment& b,
                           std::vector<Color>& phi);

// For every color a, each connected subgraph of color a holds at most one
// vertex whose multiset contains a, and that vertex contains it once.
bool is_B_opaque(const Sparsifier& s, const std::vector<Color>& phi, const MultiAssignment& b);

struct Appearance {
  SparsifierId id;
  std::vector<Vertex> image;  // image[i] is the host vertex of pattern vertex i

  bool operator==(const Appearance&) const = default;
};

// Every face at v is a cycle of length t (isolated vertices do not qualify).
bool all_faces_short_cycles(const EmbeddedGraph& g, const FaceStructure& fs, Vertex v, int t);

// All appearances of the two c-sparsifiers, one per unordered image modulo
// pattern symmetry: S1 first, then S2, each in lexicographic image order.
std::vector<Appearance> find_appearances(const EmbeddedGraph& g, const FaceStructure& fs, int c);
std::vector<Appearance> find_appearances(const EmbeddedGraph& g, int c);

// Re-checks the three defining conditions from scratch.
bool is_appearance(const EmbeddedGraph& g, const FaceStructure& fs, const Appearance& a);

// Images are disjoint and no edge joins two of them.
bool independent(const EmbeddedGraph& g, const Appearance& a, const Appearance& b);

// Greedy selection in find_appearances order.
std::vector<Appearance> greedy_maximal_system(const EmbeddedGraph& g, const FaceStructure& fs, int c);
std::vector<Appearance> greedy_maximal_system(const EmbeddedGraph& g, int c);

// phi colors every vertex outside the images.  Each image is colored by its
// sparsifier rule with b built from the colored neighbours outside it; lists
// are cut to their c smallest colors.
Coloring extend_over_appearances(const EmbeddedGraph& g, const std::vector<Appearance>& system, const Coloring& phi,
                                 const ListAssignment& lists);

}  // namespace wdc
