#include "wdc/stacks.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "wdc/error.hpp"
#include "wdc/metrics.hpp"

namespace wdc {

namespace {

std::string describe(const std::vector<Vertex>& cycle) {
  std::string s;
  for (Vertex v : cycle) s += (s.empty() ? "" : "-") + std::to_string(v);
  return s;
}

[[noreturn]] void not_a_stack(const std::vector<Vertex>& cycle, const std::string& why) {
  throw Error(ErrorCode::NotAStack, "at cycle " + describe(cycle) + ": " + why);
}

int index_in(const std::vector<Vertex>& cycle, Vertex v) {
  const auto it = std::find(cycle.begin(), cycle.end(), v);
  return it == cycle.end() ? -1 : static_cast<int>(it - cycle.begin());
}

// Neighbours of cycle[i] strictly counterclockwise between cycle[i+1] and
// cycle[i-1]; with the interior on the left these are the ones inside.
std::vector<Vertex> inner_neighbours(const EmbeddedGraph& g, const std::vector<Vertex>& cycle, int i) {
  const int len = static_cast<int>(cycle.size());
  const Vertex at = cycle[i];
  const Vertex next = cycle[(i + 1) % len];
  const Vertex prev = cycle[(i + len - 1) % len];
  const auto& rot = g.rotation(at);
  const int d = static_cast<int>(rot.size());
  const int start = g.position(at, next);
  std::vector<Vertex> out;
  for (int j = 1; j < d; ++j) {
    const Vertex w = rot[(start + j) % d];
    if (w == prev) break;
    out.push_back(w);
  }
  return out;
}

void check_cycle(const EmbeddedGraph& g, const std::vector<Vertex>& cycle, int t) {
  if (static_cast<int>(cycle.size()) != t) not_a_stack(cycle, "expected a cycle of length " + std::to_string(t));
  for (int i = 0; i < t; ++i) {
    if (cycle[i] < 0 || cycle[i] >= g.num_vertices()) throw Error(ErrorCode::InvalidInput, "vertex out of range");
    if (std::count(cycle.begin(), cycle.end(), cycle[i]) != 1) not_a_stack(cycle, "repeated vertex");
    if (!g.adjacent(cycle[i], cycle[(i + 1) % t])) not_a_stack(cycle, "consecutive vertices not adjacent");
  }
}

StackDecomposition recognize(const EmbeddedGraph& g, const FaceStructure& fs, const std::vector<Vertex>& cycle, int t) {
  StackDecomposition node;
  node.cycle = cycle;
  const CycleSides sides = cycle_sides(g, fs, cycle);
  const bool empty_inside =
      std::none_of(sides.side.begin(), sides.side.end(), [](auto s) { return s == CycleSides::Left; });
  std::optional<Vertex> apex;
  int pivot = 0;
  for (int i = 0; i < (t == 3 ? 1 : 2); ++i) {
    for (Vertex w : inner_neighbours(g, cycle, i)) {
      bool fits = true;
      for (int j = 1; j < t; ++j) {
        if (t == 4 && j != 2) continue;
        fits = fits && g.adjacent(w, cycle[(i + j) % t]);
      }
      if (fits && sides.side[w] == CycleSides::Left && (!apex || w < *apex)) {
        apex = w;
        pivot = i;
      }
    }
  }
  if (!apex) {
    if (!empty_inside) not_a_stack(cycle, "interior has no apex");
    if (t == 4) {
      for (int i = 0; i < 2; ++i) {
        const auto inner = inner_neighbours(g, cycle, i);
        if (std::find(inner.begin(), inner.end(), cycle[i + 2]) != inner.end()) not_a_stack(cycle, "inner chord");
      }
    }
    return node;
  }
  node.apex = apex;
  const Vertex a = *apex;
  if (t == 3) {
    for (int i = 0; i < 3; ++i) node.children.push_back(recognize(g, fs, {cycle[i], cycle[(i + 1) % 3], a}, t));
  } else {
    const Vertex p = cycle[pivot], q = cycle[pivot + 1], r = cycle[pivot + 2], s = cycle[(pivot + 3) % 4];
    node.children.push_back(recognize(g, fs, {p, q, r, a}, t));
    node.children.push_back(recognize(g, fs, {p, a, r, s}, t));
  }
  return node;
}

// Oriented copy of the outer cycle after checking that nothing lies outside it.
std::vector<Vertex> checked_outer(const EmbeddedGraph& g, const FaceStructure& fs, const std::vector<Vertex>& cycle,
                                  int t) {
  check_cycle(g, cycle, t);
  const std::vector<Vertex> oriented = orient_interior_left(g, fs, cycle);
  const CycleSides sides = cycle_sides(g, fs, oriented);
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    if (sides.side[x] == CycleSides::Right || sides.side[x] == CycleSides::Elsewhere) {
      not_a_stack(cycle, "vertex " + std::to_string(x) + " lies outside");
    }
  }
  for (int i = 0; i < t; ++i) {
    const auto inner = inner_neighbours(g, oriented, i);
    if (static_cast<int>(inner.size()) + 2 != g.degree(oriented[i])) not_a_stack(cycle, "outer chord");
  }
  return oriented;
}

Color smallest_allowed(const ColorList& list, const std::vector<Color>& blocked) {
  std::optional<Color> best;
  for (Color a : list) {
    if (std::find(blocked.begin(), blocked.end(), a) != blocked.end()) continue;
    if (!best || a < *best) best = a;
  }
  if (!best) throw Error(ErrorCode::PreconditionViolated, "list too short for the required exclusions");
  return *best;
}

Coloring seed_from_psi(const EmbeddedGraph& g, const std::vector<Vertex>& cycle, const ListAssignment& lists,
                       const Coloring& psi, int list_size) {
  if (static_cast<int>(lists.size()) != g.num_vertices()) throw Error(ErrorCode::InvalidInput, "one list per vertex");
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    if (static_cast<int>(lists[x].size()) < list_size) {
      throw Error(ErrorCode::PreconditionViolated, "list of vertex " + std::to_string(x) + " is too short");
    }
  }
  Coloring phi(g.num_vertices());
  for (Vertex x : cycle) {
    if (x >= psi.size() || !psi.has(x) || !list_contains(lists[x], psi[x])) {
      throw Error(ErrorCode::PreconditionViolated, "psi must colour the cycle from the lists");
    }
    phi.set(x, psi[x]);
  }
  return phi;
}

std::vector<Vertex> component_of(const EmbeddedGraph& g, const Coloring& phi, Vertex s) {
  std::vector<bool> seen(g.num_vertices(), false);
  std::vector<Vertex> out{s};
  seen[s] = true;
  for (std::size_t h = 0; h < out.size(); ++h) {
    for (Vertex y : g.rotation(out[h])) {
      if (!seen[y] && phi.get(y) == phi.get(s)) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  }
  return out;
}

}  // namespace

int StackDecomposition::depth() const {
  int best = 0;
  for (const auto& child : children) best = std::max(best, 1 + child.depth());
  return apex ? std::max(best, 1) : 0;
}

int StackDecomposition::node_count() const {
  int total = 1;
  for (const auto& child : children) total += child.node_count();
  return total;
}

std::vector<Vertex> outer_cycle(const EmbeddedGraph& g, const FaceStructure& fs) {
  if (g.num_vertices() == 0 || g.num_edges() == 0) throw Error(ErrorCode::NotAStack, "graph has no edges");
  const Face& outer = fs.face(fs.outer_face_of(0));
  if (!outer.is_cycle) throw Error(ErrorCode::NotAStack, "outer face is not bounded by a cycle");
  std::vector<Vertex> out;
  for (const Dart& d : outer.walk) out.push_back(d.from);
  return out;
}

StackDecomposition recognize_stack(const EmbeddedGraph& g, const std::vector<Vertex>& cycle, int t) {
  if (t != 3 && t != 4) throw Error(ErrorCode::InvalidInput, "stacks exist for t = 3 and t = 4");
  const FaceStructure fs = trace_faces(g);
  return recognize(g, fs, checked_outer(g, fs, cycle, t), t);
}

bool is_active(const EmbeddedGraph& g, const std::vector<Vertex>& cycle, Vertex v) {
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    if (index_in(cycle, x) >= 0) continue;
    int on_cycle = 0;
    for (Vertex y : g.rotation(x)) on_cycle += index_in(cycle, y) >= 0;
    if (on_cycle >= 2 && !g.adjacent(x, v)) return false;
  }
  return true;
}

Coloring color_3stack(const EmbeddedGraph& g, const std::vector<Vertex>& cycle, Vertex u, const ListAssignment& lists,
                      const Coloring& psi) {
  if (index_in(cycle, u) < 0) throw Error(ErrorCode::InvalidInput, "u must lie on the cycle");
  const StackDecomposition root = recognize_stack(g, cycle, 3);
  Coloring phi = seed_from_psi(g, cycle, lists, psi, 3);
  std::function<void(const StackDecomposition&, Vertex)> fill = [&](const StackDecomposition& node, Vertex top) {
    if (node.is_leaf()) return;
    std::vector<Color> blocked;
    std::vector<Color> used;
    for (Vertex x : node.cycle) {
      if (x != top) blocked.push_back(phi[x]);
      if (std::find(used.begin(), used.end(), phi[x]) == used.end()) used.push_back(phi[x]);
    }
    if (used.size() <= 2) blocked.push_back(phi[top]);
    const Vertex a = *node.apex;
    phi.set(a, smallest_allowed(lists[a], blocked));
    for (const auto& child : node.children) fill(child, a);
  };
  fill(root, u);
  return phi;
}

Coloring color_4stack(const EmbeddedGraph& g, const std::vector<Vertex>& cycle, Vertex v, const ListAssignment& lists,
                      const Coloring& psi) {
  if (index_in(cycle, v) < 0) throw Error(ErrorCode::InvalidInput, "v must lie on the cycle");
  const FaceStructure fs = trace_faces(g);
  const std::vector<Vertex> outer = checked_outer(g, fs, cycle, 4);
  recognize(g, fs, outer, 4);
  if (!is_active(g, cycle, v)) {
    throw Error(ErrorCode::NotActive, "vertex " + std::to_string(v) + " is not active for " + describe(cycle));
  }
  Coloring phi = seed_from_psi(g, cycle, lists, psi, 2);
  std::function<void(const std::vector<Vertex>&, Vertex)> fill = [&](const std::vector<Vertex>& k, Vertex active) {
    const int at = index_in(k, active);
    const CycleSides sides = cycle_sides(g, fs, k);
    if (std::none_of(sides.side.begin(), sides.side.end(), [](auto s) { return s == CycleSides::Left; })) return;
    const Vertex opposite = k[(at + 2) % 4];
    std::vector<Vertex> common{k[(at + 1) % 4]};
    for (Vertex w : inner_neighbours(g, k, at)) {
      if (g.adjacent(w, opposite)) common.push_back(w);
    }
    common.push_back(k[(at + 3) % 4]);
    const int m = static_cast<int>(common.size()) - 1;
    if (m == 1) not_a_stack(k, "no common neighbour of " + std::to_string(active) + " and its opposite vertex");
    for (int i = 1; i < m; ++i) phi.set(common[i], smallest_allowed(lists[common[i]], {phi[opposite]}));
    for (int i = 0; i < m; ++i) {
      Vertex next_active;
      if (i == 0) next_active = common[1];
      else if (i == m - 1) next_active = common[m - 1];
      else next_active = phi[common[i + 1]] == phi[active] ? common[i] : common[i + 1];
      fill({active, common[i], opposite, common[i + 1]}, next_active);
    }
  };
  fill(outer, v);
  return phi;
}

ComplianceReport compliance_checks(const EmbeddedGraph& g, const std::vector<Vertex>& cycle, const Coloring& phi,
                                   std::optional<Vertex> v) {
  const int n = g.num_vertices();
  const int len = static_cast<int>(cycle.size());
  ComplianceReport rep;
  const auto comps = monochromatic_components(g, phi);
  std::vector<int> comp(n, -1);
  for (std::size_t j = 0; j < comps.size(); ++j) {
    for (Vertex x : comps[j]) comp[x] = static_cast<int>(j);
  }
  std::vector<bool> on_cycle(n, false);
  for (Vertex x : cycle) on_cycle[x] = true;

  // Components of the colouring restricted to the cycle.
  std::vector<int> run(len);
  for (int i = 0; i < len; ++i) run[i] = i;
  std::function<int(int)> find = [&](int i) { return run[i] == i ? i : run[i] = find(run[i]); };
  for (int i = 0; i < len; ++i) {
    if (phi[cycle[i]] == phi[cycle[(i + 1) % len]]) run[find(i)] = find((i + 1) % len);
  }
  rep.psi_opaque = true;
  for (int i = 0; i < len; ++i) {
    for (int j = i + 1; j < len; ++j) {
      if (find(i) != find(j) && comp[cycle[i]] == comp[cycle[j]]) rep.psi_opaque = false;
    }
  }

  int transversal_id = -1;
  for (std::size_t j = 0; j < comps.size(); ++j) {
    bool meets = false, leaves = false;
    for (Vertex x : comps[j]) (on_cycle[x] ? meets : leaves) = true;
    if (meets && leaves) {
      ++rep.transversal;
      transversal_id = static_cast<int>(j);
    }
  }

  if (v && len == 4) {
    const int at = index_in(cycle, *v);
    const Vertex opposite = cycle[(at + 2) % 4];
    if (rep.transversal == 0) {
      rep.contains_v = rep.v_differs_from_opposite = rep.off_cycle_members_see_uncovered_cycle = true;
    } else if (rep.transversal == 1) {
      const auto& q = comps[transversal_id];
      rep.contains_v = comp[*v] == transversal_id;
      rep.v_differs_from_opposite = phi[*v] != phi[opposite];
      rep.off_cycle_members_see_uncovered_cycle = std::all_of(q.begin(), q.end(), [&](Vertex x) {
        if (on_cycle[x]) return true;
        for (Vertex y : g.rotation(x)) {
          if (on_cycle[y] && comp[y] != transversal_id) return true;
        }
        return false;
      });
    }
    rep.v_compliant = rep.contains_v && rep.v_differs_from_opposite && rep.off_cycle_members_see_uncovered_cycle;
    rep.active = is_active(g, cycle, *v);
  }

  for (Vertex x : cycle) {
    bool alone = true;
    for (Vertex y : g.rotation(x)) {
      if (!on_cycle[y] && phi[y] == phi[x]) alone = false;
    }
    rep.singleton.push_back(alone);
  }
  return rep;
}

bool component_in_closed_neighbourhoods(const EmbeddedGraph& g, const std::vector<Vertex>& cycle, const Coloring& phi,
                                        Vertex u) {
  const auto q = component_of(g, phi, u);
  for (Vertex w : cycle) {
    if (w == u) continue;
    for (Vertex x : q) {
      if (x != w && !g.adjacent(x, w)) return false;
    }
  }
  return true;
}

}  // namespace wdc
