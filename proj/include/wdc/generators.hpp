#pragma once

#include <cstdint>
#include <vector>

#include "wdc/graph.hpp"

namespace wdc {

// A plane graph with two interface vertices on its outer face.  At both
// interfaces the outer corner sits between the last and the first entry of
// the rotation, which is what edge substitution relies on.
struct InterfacedGraph {
  EmbeddedGraph graph;
  Vertex u = 0;
  Vertex v = 1;
};

// Vertex count recurrence f(0) = 2, f(i) = 2 + k + k (f(i-1) - 2).
long long h_vertex_count(int i, int k);
long long hprime_vertex_count(int i, int k);

InterfacedGraph gen_H(int i, int k);
EmbeddedGraph gen_G(int ell);
InterfacedGraph gen_Hprime(int i, int k);
EmbeddedGraph gen_Gprime(int ell);

// n x n grid, vertex id y * n + x, every unit square split by the diagonal
// (x, y) - (x + 1, y + 1).
EmbeddedGraph gen_triangulated_grid(int n);

// Nested t-stack over a t-cycle 0..t-1 whose inner face is 0 -> 1 -> ... -> t-1.
// The root expands when depth >= 1; a face at level r < depth expands with
// probability 0.7^r.
EmbeddedGraph gen_random_stack(int t, int depth, std::uint64_t seed);

// Random plane graph of girth at least 2c/(c-1) with n vertices.
EmbeddedGraph gen_random_planar(int n, int c, std::uint64_t seed);

EmbeddedGraph gen_cycle(int n);
EmbeddedGraph gen_cube();
EmbeddedGraph gen_dodecahedron();

// Replaces edge (a, b) of the rotation system by a copy of `child`, child.u
// glued to a and child.v to b.  New vertices are appended.
void substitute_edge(std::vector<std::vector<Vertex>>& rot, Vertex a, Vertex b, const InterfacedGraph& child);

}  // namespace wdc
