#include "wdc/faces.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "wdc/error.hpp"

namespace wdc {

std::vector<int> FaceStructure::faces_at(const EmbeddedGraph& g, Vertex v) const {
  std::vector<int> out;
  out.reserve(g.degree(v));
  const int base = g.dart_offset(v);
  for (int i = 0; i < g.degree(v); ++i) out.push_back(dart_face_[base + i]);
  return out;
}

FaceStructure trace_faces(const EmbeddedGraph& g) {
  FaceStructure fs;
  const int n = g.num_vertices();
  fs.dart_face_.assign(g.num_darts(), -1);
  for (int start = 0; start < g.num_darts(); ++start) {
    if (fs.dart_face_[start] >= 0) continue;
    Face f;
    f.id = static_cast<int>(fs.faces_.size());
    Dart d = g.dart(start);
    int index = start;
    while (fs.dart_face_[index] < 0) {
      fs.dart_face_[index] = f.id;
      f.walk.push_back(d);
      d = Dart{d.to, g.predecessor(d.to, d.from)};
      index = g.dart_index(d.from, d.to);
    }
    if (index != start) {
      throw Error(ErrorCode::InvalidInput, "face walk does not close");
    }
    f.length = static_cast<int>(f.walk.size());
    for (const Dart& w : f.walk) f.vertices.push_back(w.from);
    std::sort(f.vertices.begin(), f.vertices.end());
    f.vertices.erase(std::unique(f.vertices.begin(), f.vertices.end()), f.vertices.end());
    f.is_cycle = f.length >= 3 && static_cast<int>(f.vertices.size()) == f.length;
    fs.faces_.push_back(std::move(f));
  }

  int count = 0;
  fs.component_ = component_ids(g, &count);
  std::vector<int> comp_vertices(count, 0), comp_edges(count, 0), comp_faces(count, 0);
  for (Vertex v = 0; v < n; ++v) {
    ++comp_vertices[fs.component_[v]];
    comp_edges[fs.component_[v]] += g.degree(v);
  }
  for (const Face& f : fs.faces_) ++comp_faces[fs.component_[f.walk.front().from]];
  for (int c = 0; c < count; ++c) {
    const int edges = comp_edges[c] / 2;
    if (edges == 0) continue;
    if (comp_vertices[c] - edges + comp_faces[c] != 2) {
      throw Error(ErrorCode::EulerViolation,
                  "component with " + std::to_string(comp_vertices[c]) + " vertices, " + std::to_string(edges) +
                      " edges and " + std::to_string(comp_faces[c]) + " faces");
    }
  }

  fs.outer_by_component_.assign(count, -1);
  auto better = [&](int a, int b) {
    const Face& fa = fs.faces_[a];
    const Face& fb = fs.faces_[b];
    if (fa.length != fb.length) return fa.length > fb.length;
    if (fa.vertices.front() != fb.vertices.front()) return fa.vertices.front() < fb.vertices.front();
    return a < b;
  };
  for (const Face& f : fs.faces_) {
    int& slot = fs.outer_by_component_[fs.component_[f.walk.front().from]];
    if (slot < 0 || better(f.id, slot)) slot = f.id;
  }
  if (auto m = g.outer_marker()) {
    fs.outer_by_component_[fs.component_[m->from]] = fs.face_of(g, *m);
  }
  fs.is_outer_.assign(fs.faces_.size(), false);
  for (int id : fs.outer_by_component_) {
    if (id >= 0) fs.is_outer_[id] = true;
  }
  return fs;
}

namespace {

struct CycleFrame {
  std::vector<int> index;  // position on the cycle, or -1
  int length = 0;
};

CycleFrame make_frame(int n, const std::vector<Vertex>& cycle) {
  CycleFrame fr;
  fr.index.assign(n, -1);
  fr.length = static_cast<int>(cycle.size());
  for (int i = 0; i < fr.length; ++i) {
    if (fr.index[cycle[i]] >= 0) throw Error(ErrorCode::InvalidInput, "cycle repeats a vertex");
    fr.index[cycle[i]] = i;
  }
  return fr;
}

// Offset of w counterclockwise from `from` in the rotation at v.
int ccw_offset(const EmbeddedGraph& g, Vertex v, Vertex from, Vertex w) {
  const int d = g.degree(v);
  return (g.position(v, w) - g.position(v, from) + d) % d;
}

}  // namespace

CycleSides cycle_sides(const EmbeddedGraph& g, const FaceStructure& fs, const std::vector<Vertex>& cycle) {
  const int n = g.num_vertices();
  const CycleFrame fr = make_frame(n, cycle);
  const int len = fr.length;
  if (len < 3) throw Error(ErrorCode::InvalidInput, "cycle shorter than 3");
  CycleSides cs;
  cs.side.assign(n, CycleSides::Elsewhere);
  std::vector<Vertex> stack;
  for (int i = 0; i < len; ++i) {
    const Vertex a = cycle[i];
    const Vertex next = cycle[(i + 1) % len];
    const Vertex prev = cycle[(i + len - 1) % len];
    if (!g.adjacent(a, next)) throw Error(ErrorCode::InvalidInput, "cycle uses a missing edge");
    cs.side[a] = CycleSides::OnCycle;
    const int off_prev = ccw_offset(g, a, next, prev);
    for (Vertex w : g.rotation(a)) {
      if (fr.index[w] >= 0) continue;
      const int off = ccw_offset(g, a, next, w);
      const auto s = off < off_prev ? CycleSides::Left : CycleSides::Right;
      if (cs.side[w] == CycleSides::Elsewhere) {
        cs.side[w] = s;
        stack.push_back(w);
      }
    }
  }
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : g.rotation(x)) {
      if (cs.side[y] == CycleSides::Elsewhere) {
        cs.side[y] = cs.side[x];
        stack.push_back(y);
      }
    }
  }
  const int outer = fs.outer_face_of(cycle[0]);
  const Dart d = fs.face(outer).walk.front();
  if (fr.index[d.from] < 0) {
    cs.outer_on_left = cs.side[d.from] == CycleSides::Left;
  } else {
    const int i = fr.index[d.from];
    const Vertex next = cycle[(i + 1) % len];
    const Vertex prev = cycle[(i + len - 1) % len];
    cs.outer_on_left = ccw_offset(g, d.from, next, d.to) < ccw_offset(g, d.from, next, prev);
  }
  return cs;
}

std::vector<Vertex> cycle_interior(const EmbeddedGraph& g, const FaceStructure& fs,
                                   const std::vector<Vertex>& cycle) {
  const CycleSides cs = cycle_sides(g, fs, cycle);
  const auto inside = cs.outer_on_left ? CycleSides::Right : CycleSides::Left;
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (cs.side[v] == inside) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> orient_interior_left(const EmbeddedGraph& g, const FaceStructure& fs,
                                         const std::vector<Vertex>& cycle) {
  const CycleSides cs = cycle_sides(g, fs, cycle);
  if (!cs.outer_on_left) return cycle;
  std::vector<Vertex> out{cycle.front()};
  out.insert(out.end(), cycle.rbegin(), cycle.rend() - 1);
  return out;
}

bool is_separating_cycle(const EmbeddedGraph& g, const FaceStructure& fs, const std::vector<Vertex>& cycle) {
  const CycleSides cs = cycle_sides(g, fs, cycle);
  bool left = false, right = false;
  for (auto s : cs.side) {
    left = left || s == CycleSides::Left;
    right = right || s == CycleSides::Right;
  }
  return left && right;
}

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

Subgraph induced_subgraph(const EmbeddedGraph& g, const std::vector<bool>& keep) {
  const int n = g.num_vertices();
  Subgraph sub;
  sub.from_parent.assign(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    if (keep[v]) {
      sub.from_parent[v] = static_cast<int>(sub.to_parent.size());
      sub.to_parent.push_back(v);
    }
  }
  std::vector<std::vector<Vertex>> rot(sub.to_parent.size());
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i) {
    for (Vertex w : g.rotation(sub.to_parent[i])) {
      if (keep[w]) rot[i].push_back(sub.from_parent[w]);
    }
  }
  std::optional<Dart> marker;
  if (auto m = g.outer_marker()) {
    if (keep[m->from] && keep[m->to]) {
      marker = Dart{sub.from_parent[m->from], sub.from_parent[m->to]};
    } else {
      const FaceStructure fs = trace_faces(g);
      std::vector<int> parent(fs.num_faces());
      std::iota(parent.begin(), parent.end(), 0);
      for (Vertex v = 0; v < n; ++v) {
        if (keep[v] || g.degree(v) == 0) continue;
        const auto around = fs.faces_at(g, v);
        for (int f : around) parent[find_root(parent, f)] = find_root(parent, around.front());
      }
      const int target = find_root(parent, fs.face_of(g, *m));
      for (int i = 0; i < g.num_darts(); ++i) {
        const Dart d = g.dart(i);
        if (keep[d.from] && keep[d.to] && find_root(parent, fs.face_of_dart_index(i)) == target) {
          marker = Dart{sub.from_parent[d.from], sub.from_parent[d.to]};
          break;
        }
      }
    }
  }
  sub.graph = EmbeddedGraph(std::move(rot), marker);
  return sub;
}

Subgraph induced_subgraph(const EmbeddedGraph& g, const std::vector<Vertex>& keep) {
  std::vector<bool> mask(g.num_vertices(), false);
  for (Vertex v : keep) mask[v] = true;
  return induced_subgraph(g, mask);
}

Subgraph disk_subgraph(const EmbeddedGraph& g, const FaceStructure& fs, const std::vector<Vertex>& cycle_in) {
  const std::vector<Vertex> cycle = orient_interior_left(g, fs, cycle_in);
  const CycleSides cs = cycle_sides(g, fs, cycle);
  const int n = g.num_vertices();
  const int len = static_cast<int>(cycle.size());
  // After orientation the interior is on the left.
  Subgraph sub;
  sub.from_parent.assign(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    if (cs.side[v] == CycleSides::OnCycle || cs.side[v] == CycleSides::Left) {
      sub.from_parent[v] = static_cast<int>(sub.to_parent.size());
      sub.to_parent.push_back(v);
    }
  }
  std::vector<std::vector<Vertex>> rot(sub.to_parent.size());
  std::vector<int> index(n, -1);
  for (int i = 0; i < len; ++i) index[cycle[i]] = i;
  for (std::size_t j = 0; j < sub.to_parent.size(); ++j) {
    const Vertex v = sub.to_parent[j];
    if (index[v] < 0) {
      for (Vertex w : g.rotation(v)) rot[j].push_back(sub.from_parent[w]);
      continue;
    }
    const int i = index[v];
    const Vertex next = cycle[(i + 1) % len];
    const Vertex prev = cycle[(i + len - 1) % len];
    const auto& r = g.rotation(v);
    const int d = g.degree(v);
    int p = g.position(v, next);
    while (true) {
      rot[j].push_back(sub.from_parent[r[p]]);
      if (r[p] == prev) break;
      p = (p + 1) % d;
    }
  }
  const Dart marker{sub.from_parent[cycle[1]], sub.from_parent[cycle[0]]};
  sub.graph = EmbeddedGraph(std::move(rot), marker);
  return sub;
}

std::vector<std::vector<Vertex>> connected_components(const EmbeddedGraph& g) {
  int count = 0;
  const auto comp = component_ids(g, &count);
  std::vector<std::vector<Vertex>> out(count);
  for (Vertex v = 0; v < g.num_vertices(); ++v) out[comp[v]].push_back(v);
  return out;
}

}  // namespace wdc
