#include "wdc/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "wdc/error.hpp"
#include "wdc/faces.hpp"
#include "wdc/metrics.hpp"
#include "wdc/random.hpp"

namespace wdc {

namespace {

using Rotations = std::vector<std::vector<Vertex>>;
using Point = std::pair<double, double>;
using Edge = std::pair<Vertex, Vertex>;

void replace_entry(std::vector<Vertex>& r, Vertex old, const std::vector<Vertex>& with) {
  auto it = std::find(r.begin(), r.end(), old);
  if (it == r.end()) throw Error(ErrorCode::InvalidInput, "substituted edge is missing");
  it = r.erase(it);
  r.insert(it, with.begin(), with.end());
}

EmbeddedGraph finish(Rotations rot, Vertex low) {
  std::optional<Dart> marker;
  if (!rot[low].empty()) marker = Dart{low, rot[low].back()};
  return EmbeddedGraph(std::move(rot), marker);
}

InterfacedGraph empty_interface() { return {EmbeddedGraph(Rotations(2)), 0, 1}; }

// Inserts x into the given corners of a face walk (indices ascending).
void insert_vertex(Rotations& rot, const std::vector<Vertex>& walk, const std::vector<int>& corners) {
  const Vertex x = static_cast<Vertex>(rot.size());
  rot.emplace_back();
  const int len = static_cast<int>(walk.size());
  for (int i : corners) {
    auto& r = rot[walk[i]];
    auto it = std::find(r.begin(), r.end(), walk[(i + 1) % len]);
    r.insert(it + 1, x);
    rot[x].push_back(walk[i]);
  }
}

void insert_chord(Rotations& rot, const std::vector<Vertex>& walk, int i, int j) {
  const int len = static_cast<int>(walk.size());
  auto place = [&](int from, int to) {
    auto& r = rot[walk[from]];
    auto it = std::find(r.begin(), r.end(), walk[(from + 1) % len]);
    r.insert(it + 1, walk[to]);
  };
  place(i, j);
  place(j, i);
}

std::vector<Vertex> walk_vertices(const Face& f) {
  std::vector<Vertex> out;
  out.reserve(f.walk.size());
  for (const Dart& d : f.walk) out.push_back(d.from);
  return out;
}

}  // namespace

void substitute_edge(Rotations& rot, Vertex a, Vertex b, const InterfacedGraph& child) {
  const EmbeddedGraph& h = child.graph;
  const Vertex base = static_cast<Vertex>(rot.size());
  std::vector<Vertex> map(h.num_vertices());
  Vertex next = base;
  for (Vertex w = 0; w < h.num_vertices(); ++w) {
    if (w == child.u) map[w] = a;
    else if (w == child.v) map[w] = b;
    else map[w] = next++;
  }
  rot.resize(next);
  auto mapped = [&](Vertex w) {
    std::vector<Vertex> out;
    out.reserve(h.degree(w));
    for (Vertex y : h.rotation(w)) out.push_back(map[y]);
    return out;
  };
  for (Vertex w = 0; w < h.num_vertices(); ++w) {
    if (w != child.u && w != child.v) rot[map[w]] = mapped(w);
  }
  replace_entry(rot[a], b, mapped(child.u));
  replace_entry(rot[b], a, mapped(child.v));
}

long long h_vertex_count(int i, int k) {
  long long f = 2;
  for (int level = 1; level <= i; ++level) f = 2 + k + static_cast<long long>(k) * (f - 2);
  return f;
}

long long hprime_vertex_count(int i, int k) {
  long long f = 2;
  for (int level = 1; level <= i; ++level) f = 2 + k + 2LL * k * (f - 2);
  return f;
}

InterfacedGraph gen_H(int i, int k) {
  if (i < 0 || k < 1) throw Error(ErrorCode::InvalidInput, "gen_H needs i >= 0 and k >= 1");
  if (i == 0) return empty_interface();
  const double mid = (k + 1) / 2.0;
  std::vector<Point> pts{{mid, 1.0}, {mid, -1.0}};
  std::vector<Edge> edges;
  for (int j = 1; j <= k; ++j) {
    pts.emplace_back(static_cast<double>(j), 0.0);
    const Vertex vj = j + 1;
    if (j < k) edges.emplace_back(vj, vj + 1);
    edges.emplace_back(0, vj);
    edges.emplace_back(1, vj);
  }
  const EmbeddedGraph skeleton = straight_line_embedding(pts, edges);
  Rotations rot = skeleton.rotations();
  const InterfacedGraph child = gen_H(i - 1, k);
  for (int j = 1; j <= k; ++j) {
    // Real attachment: u for odd j, v for even j; the other side is a child copy.
    substitute_edge(rot, j + 1, j % 2 == 1 ? 1 : 0, child);
  }
  return {finish(std::move(rot), skeleton.outer_marker()->from), 0, 1};
}

EmbeddedGraph gen_G(int ell) {
  if (ell < 1) throw Error(ErrorCode::InvalidInput, "gen_G needs ell >= 1");
  const int side = ell + 1;
  std::vector<Point> pts;
  std::vector<Edge> edges, diagonals;
  for (int y = 0; y < side; ++y) {
    for (int x = 0; x < side; ++x) {
      pts.emplace_back(x, y);
      const Vertex id = y * side + x;
      if (x + 1 < side) edges.emplace_back(id, id + 1);
      if (y + 1 < side) edges.emplace_back(id, id + side);
      if (x + 1 < side && y + 1 < side) diagonals.emplace_back(id, id + side + 1);
    }
  }
  std::vector<Edge> all = edges;
  all.insert(all.end(), diagonals.begin(), diagonals.end());
  const EmbeddedGraph skeleton = straight_line_embedding(pts, all);
  Rotations rot = skeleton.rotations();
  const InterfacedGraph child = gen_H(ell + 1, 2 * ell);
  for (const auto& [a, b] : diagonals) substitute_edge(rot, a, b, child);
  return finish(std::move(rot), skeleton.outer_marker()->from);
}

InterfacedGraph gen_Hprime(int i, int k) {
  if (i < 0 || k < 1) throw Error(ErrorCode::InvalidInput, "gen_Hprime needs i >= 0 and k >= 1");
  if (i == 0) return {EmbeddedGraph(Rotations{{1}, {0}}, Dart{1, 0}), 0, 1};
  std::vector<Point> pts{{0.0, 1.0}, {0.0, -1.0}};
  std::vector<Edge> edges{{0, 1}};
  for (int j = 1; j <= k; ++j) {
    pts.emplace_back(static_cast<double>(j), 0.0);
    const Vertex vj = j + 1;
    if (j < k) edges.emplace_back(vj, vj + 1);
    edges.emplace_back(0, vj);
    edges.emplace_back(1, vj);
  }
  const EmbeddedGraph skeleton = straight_line_embedding(pts, edges);
  Rotations rot = skeleton.rotations();
  const InterfacedGraph child = gen_Hprime(i - 1, k);
  for (int j = 1; j <= k; ++j) {
    substitute_edge(rot, j + 1, 0, child);
    substitute_edge(rot, j + 1, 1, child);
  }
  return {finish(std::move(rot), skeleton.outer_marker()->from), 0, 1};
}

EmbeddedGraph gen_Gprime(int ell) {
  if (ell < 1) throw Error(ErrorCode::InvalidInput, "gen_Gprime needs ell >= 1");
  Rotations rot(ell + 1);
  for (int j = 0; j <= ell; ++j) {
    if (j > 0) rot[j].push_back(j - 1);
    if (j < ell) rot[j].push_back(j + 1);
  }
  const InterfacedGraph child = gen_Hprime(ell + 1, 2 * ell);
  for (int j = 0; j < ell; ++j) substitute_edge(rot, j, j + 1, child);
  return finish(std::move(rot), 0);
}

EmbeddedGraph gen_triangulated_grid(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "grid side must be positive");
  std::vector<Point> pts;
  std::vector<Edge> edges;
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      pts.emplace_back(x, y);
      const Vertex id = y * n + x;
      if (x + 1 < n) edges.emplace_back(id, id + 1);
      if (y + 1 < n) edges.emplace_back(id, id + n);
      if (x + 1 < n && y + 1 < n) edges.emplace_back(id, id + n + 1);
    }
  }
  return straight_line_embedding(pts, edges);
}

EmbeddedGraph gen_cycle(int n) {
  if (n < 3) throw Error(ErrorCode::InvalidInput, "cycle needs at least 3 vertices");
  Rotations rot(n);
  for (int i = 0; i < n; ++i) rot[i] = {(i + 1) % n, (i + n - 1) % n};
  return EmbeddedGraph(std::move(rot), Dart{0, n - 1});
}

EmbeddedGraph gen_random_stack(int t, int depth, std::uint64_t seed) {
  if (t != 3 && t != 4) throw Error(ErrorCode::InvalidInput, "stacks exist for t = 3 and t = 4");
  if (depth < 0) throw Error(ErrorCode::InvalidInput, "depth must be non-negative");
  Rng rng(seed);
  Rotations rot = gen_cycle(t).rotations();
  struct Pending {
    std::vector<Vertex> walk;
    int level;
  };
  std::vector<Pending> stack;
  std::vector<Vertex> root(t);
  for (int i = 0; i < t; ++i) root[i] = i;
  stack.push_back({root, 0});
  while (!stack.empty()) {
    Pending cur = std::move(stack.back());
    stack.pop_back();
    if (cur.level >= depth) continue;
    if (cur.level > 0 && !rng.bernoulli(std::pow(0.7, cur.level))) continue;
    const Vertex x = static_cast<Vertex>(rot.size());
    const auto& w = cur.walk;
    std::vector<Pending> children;
    if (t == 3) {
      insert_vertex(rot, w, {0, 1, 2});
      children = {{{w[0], w[1], x}, cur.level + 1}, {{w[1], w[2], x}, cur.level + 1}, {{w[2], w[0], x}, cur.level + 1}};
    } else if (rng.below(2) == 0) {
      insert_vertex(rot, w, {0, 2});
      children = {{{w[0], w[1], w[2], x}, cur.level + 1}, {{w[2], w[3], w[0], x}, cur.level + 1}};
    } else {
      insert_vertex(rot, w, {1, 3});
      children = {{{w[1], w[2], w[3], x}, cur.level + 1}, {{w[3], w[0], w[1], x}, cur.level + 1}};
    }
    for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back(std::move(*it));
  }
  return EmbeddedGraph(std::move(rot), Dart{0, t - 1});
}

EmbeddedGraph gen_random_planar(int n, int c, std::uint64_t seed) {
  if (c != 2 && c != 3) throw Error(ErrorCode::InvalidInput, "c must be 2 or 3");
  const int t = c == 2 ? 4 : 3;
  if (n < t) throw Error(ErrorCode::InvalidInput, "need at least " + std::to_string(t) + " vertices");
  Rng rng(seed);
  EmbeddedGraph g = gen_cycle(t);
  Dart marker{0, t - 1};
  long long attempts = 0;
  while (g.num_vertices() < n) {
    if (++attempts > 1000000) throw Error(ErrorCode::InvalidInput, "random planar generation stalled");
    const FaceStructure fs = trace_faces(g);
    Rotations rot = g.rotations();
    const double op = rng.unit();
    bool changed = false;
    if (op < 0.5) {
      const Face& f = fs.face(static_cast<int>(rng.below(fs.num_faces())));
      const std::vector<Vertex> walk = walk_vertices(f);
      const int want = rng.uniform_int(1, 3);
      std::vector<int> order(walk.size());
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
      rng.shuffle(order);
      std::vector<int> corners;
      for (int i : order) {
        if (static_cast<int>(corners.size()) == want) break;
        bool ok = true;
        for (int j : corners) {
          if (walk[i] == walk[j] || (c == 2 && g.adjacent(walk[i], walk[j]))) ok = false;
        }
        if (ok) corners.push_back(i);
      }
      std::sort(corners.begin(), corners.end());
      insert_vertex(rot, walk, corners);
      changed = true;
    } else if (op < 0.75) {
      const Face& f = fs.face(static_cast<int>(rng.below(fs.num_faces())));
      const std::vector<Vertex> walk = walk_vertices(f);
      int i = static_cast<int>(rng.below(walk.size()));
      int j = static_cast<int>(rng.below(walk.size()));
      if (i > j) std::swap(i, j);
      const Vertex a = walk[i], b = walk[j];
      if (a != b && !g.adjacent(a, b)) {
        bool ok = true;
        if (c == 2) {
          const auto d = distances_from(g, a)[b];
          ok = !d || *d >= 3;
        }
        if (ok) {
          insert_chord(rot, walk, i, j);
          changed = true;
        }
      }
    } else {
      const auto edges = g.edges();
      const auto [a, b] = edges[rng.below(edges.size())];
      const Vertex x = static_cast<Vertex>(rot.size());
      std::replace(rot[a].begin(), rot[a].end(), b, x);
      std::replace(rot[b].begin(), rot[b].end(), a, x);
      rot.push_back({a, b});
      if (marker == Dart{a, b}) marker = Dart{a, x};
      if (marker == Dart{b, a}) marker = Dart{b, x};
      changed = true;
    }
    if (changed) g = EmbeddedGraph(std::move(rot), marker);
  }
  return g;
}

EmbeddedGraph gen_cube() {
  const std::vector<Point> pts{{-2, -2}, {2, -2}, {2, 2}, {-2, 2}, {-1, -1}, {1, -1}, {1, 1}, {-1, 1}};
  std::vector<Edge> edges;
  for (int i = 0; i < 4; ++i) {
    edges.emplace_back(i, (i + 1) % 4);
    edges.emplace_back(4 + i, 4 + (i + 1) % 4);
    edges.emplace_back(i, 4 + i);
  }
  return straight_line_embedding(pts, edges);
}

EmbeddedGraph gen_dodecahedron() {
  // Outer pentagon 0..4, middle ring 5..14, inner pentagon 15..19.
  std::vector<Point> pts(20);
  auto polar = [](double r, double deg) {
    const double a = deg * std::numbers::pi / 180.0;
    return Point{r * std::cos(a), r * std::sin(a)};
  };
  for (int i = 0; i < 5; ++i) {
    pts[i] = polar(3.0, 90.0 + 72.0 * i);
    pts[15 + i] = polar(1.0, 90.0 + 72.0 * i + 36.0);
  }
  for (int j = 0; j < 10; ++j) pts[5 + j] = polar(2.0, 90.0 + 36.0 * j);
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, 5 + 2 * i);
    edges.emplace_back(5 + 2 * i + 1, 15 + i);
    edges.emplace_back(15 + i, 15 + (i + 1) % 5);
  }
  for (int j = 0; j < 10; ++j) edges.emplace_back(5 + j, 5 + (j + 1) % 10);
  return straight_line_embedding(pts, edges);
}

}  // namespace wdc
