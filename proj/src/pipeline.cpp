#include "wdc/pipeline.hpp"

#include <algorithm>
#include <string>

#include "wdc/error.hpp"
#include "wdc/sparsifiers.hpp"
#include "wdc/stacks.hpp"

namespace wdc {

namespace {

int tight_length(int c) {
  if (c != 2 && c != 3) throw Error(ErrorCode::InvalidInput, "c must be 2 or 3");
  return c == 2 ? 4 : 3;
}

// Every t-cycle once, starting at its smallest vertex.
std::vector<std::vector<Vertex>> short_cycles(const EmbeddedGraph& g, int t) {
  std::vector<std::vector<Vertex>> out;
  const int n = g.num_vertices();
  for (Vertex a = 0; a < n; ++a) {
    const auto& ra = g.rotation(a);
    for (Vertex b : ra) {
      if (b <= a) continue;
      for (Vertex d : ra) {
        if (d <= b) continue;
        if (t == 3) {
          if (g.adjacent(b, d)) out.push_back({a, b, d});
          continue;
        }
        for (Vertex x : g.rotation(b)) {
          if (x > a && x != d && g.adjacent(x, d)) out.push_back({a, b, x, d});
        }
      }
    }
  }
  return out;
}

bool bounds_a_face(const EmbeddedGraph& g, const FaceStructure& fs, const std::vector<Vertex>& cycle) {
  std::vector<Vertex> sorted = cycle;
  std::sort(sorted.begin(), sorted.end());
  for (const Dart d : {Dart{cycle[0], cycle[1]}, Dart{cycle[1], cycle[0]}}) {
    const Face& f = fs.face(fs.face_of(g, d));
    if (f.is_cycle && f.vertices == sorted) return true;
  }
  return false;
}

ListAssignment restrict_lists(const ListAssignment& lists, const std::vector<Vertex>& to_parent) {
  ListAssignment out(to_parent.size());
  for (std::size_t j = 0; j < to_parent.size(); ++j) out[j] = lists[to_parent[j]];
  return out;
}

Color first_free(const ColorList& list, const std::vector<Color>& banned) {
  for (Color a : list) {
    if (std::find(banned.begin(), banned.end(), a) == banned.end()) return a;
  }
  throw Error(ErrorCode::PreconditionViolated, "no list color avoids the cycle neighbours");
}

struct StackJob {
  Subgraph disk;               // vertex ids of the graph of its round
  std::vector<Vertex> parent;  // disk vertex -> original vertex
  std::vector<Vertex> cycle;   // in disk ids, bounding its outer face
};

class Extender {
 public:
  Extender(int c, const BoundTracker& tracker, PipelineStats* stats)
      : c_(c), t_(tight_length(c)), tracker_(tracker), stats_(stats) {}

  // cycle empty or bounding the outer face; psi colors it.
  Coloring solve(const EmbeddedGraph& g, const ListAssignment& lists, const std::vector<Vertex>& cycle,
                 const Coloring& psi) const {
    const int n = g.num_vertices();
    if (n == 0) return Coloring(0);
    if (!cycle.empty() && !is_c_solitary(g, cycle, c_)) {
      throw Error(ErrorCode::PreconditionViolated, "precolored cycle is not solitary");
    }
    const FaceStructure fs = trace_faces(g);
    const std::vector<SeparatingCycle> seps = find_separating_t_cycles(g, fs, t_);
    for (const SeparatingCycle& k : seps) {
      if (!is_solitary_inside(g, k)) continue;
      if (stats_) ++stats_->solitary_splits;
      return split(g, fs, lists, cycle, psi, k);
    }
    return through_stacks(g, fs, lists, cycle, psi, seps);
  }

 private:
  bool is_solitary_inside(const EmbeddedGraph& g, const SeparatingCycle& k) const {
    for (Vertex v : k.interior) {
      int on = 0;
      for (Vertex w : g.rotation(v)) on += std::find(k.cycle.begin(), k.cycle.end(), w) != k.cycle.end();
      if (on >= c_) return false;
    }
    return true;
  }

  Coloring split(const EmbeddedGraph& g, const FaceStructure& fs, const ListAssignment& lists,
                 const std::vector<Vertex>& cycle, const Coloring& psi, const SeparatingCycle& k) const {
    const int n = g.num_vertices();
    std::vector<bool> keep(n, true);
    for (Vertex v : k.interior) keep[v] = false;
    const Subgraph outside = induced_subgraph(g, keep);
    std::vector<Vertex> cycle1;
    Coloring psi1(static_cast<int>(outside.to_parent.size()));
    for (Vertex v : cycle) {
      cycle1.push_back(outside.from_parent[v]);
      psi1.set(outside.from_parent[v], psi[v]);
    }
    const Coloring phi1 = solve(outside.graph, restrict_lists(lists, outside.to_parent), cycle1, psi1);

    const Subgraph disk = disk_subgraph(g, fs, k.cycle);
    std::vector<Vertex> cycle2;
    Coloring psi2(static_cast<int>(disk.to_parent.size()));
    for (Vertex v : k.cycle) {
      cycle2.push_back(disk.from_parent[v]);
      psi2.set(disk.from_parent[v], phi1[outside.from_parent[v]]);
    }
    const Coloring phi2 = solve(disk.graph, restrict_lists(lists, disk.to_parent), cycle2, psi2);

    Coloring phi(n);
    for (std::size_t j = 0; j < outside.to_parent.size(); ++j) phi.set(outside.to_parent[j], phi1[j]);
    for (std::size_t j = 0; j < disk.to_parent.size(); ++j) phi.set(disk.to_parent[j], phi2[j]);
    return phi;
  }

  Coloring through_stacks(const EmbeddedGraph& g, const FaceStructure& fs, const ListAssignment& lists,
                          const std::vector<Vertex>& cycle, const Coloring& psi,
                          const std::vector<SeparatingCycle>& seps) const {
    const int n = g.num_vertices();
    for (const SeparatingCycle& k : seps) {
      const Subgraph disk = disk_subgraph(g, fs, k.cycle);
      try {
        recognize_stack(disk.graph, to_disk(disk, k.cycle), t_);
      } catch (const Error& e) {
        throw Error(ErrorCode::StackExpected, std::string("separating cycle does not bound a stack: ") + e.what());
      }
    }

    // Peel selected disks until the remaining graph has no separating cycle.
    std::vector<bool> alive(n, true);
    std::vector<StackJob> jobs;
    std::vector<SeparatingCycle> round = seps;
    Subgraph cur = induced_subgraph(g, alive);
    while (!round.empty()) {
      const FaceStructure cur_fs = trace_faces(cur.graph);
      for (const SeparatingCycle& k : round) {
        if (!k.selected) continue;
        if (stats_) ++stats_->stacks;
        StackJob job;
        job.disk = disk_subgraph(cur.graph, cur_fs, k.cycle);
        for (Vertex x : job.disk.to_parent) job.parent.push_back(cur.to_parent[x]);
        job.cycle = to_disk(job.disk, k.cycle);
        for (Vertex v : k.interior) alive[cur.to_parent[v]] = false;
        jobs.push_back(std::move(job));
      }
      cur = induced_subgraph(g, alive);
      round = find_separating_t_cycles(cur.graph, t_);
    }

    std::vector<bool> core_keep = alive;
    for (Vertex v : cycle) core_keep[v] = false;
    const Subgraph core = induced_subgraph(g, core_keep);
    const Coloring core_phi =
        color_no_short_separating(core.graph, restrict_lists(lists, core.to_parent), c_, tracker_, stats_);

    Coloring phi(n);
    for (std::size_t j = 0; j < core.to_parent.size(); ++j) phi.set(core.to_parent[j], core_phi[j]);
    for (Vertex v : cycle) phi.set(v, psi[v]);
    for (auto it = jobs.rbegin(); it != jobs.rend(); ++it) color_job(*it, lists, phi);

    if (!cycle.empty()) {
      std::vector<bool> on_cycle(n, false);
      for (Vertex v : cycle) on_cycle[v] = true;
      for (Vertex v = 0; v < n; ++v) {
        if (on_cycle[v]) continue;
        std::vector<Color> banned;
        for (Vertex w : g.rotation(v)) {
          if (on_cycle[w]) banned.push_back(psi[w]);
        }
        if (!banned.empty()) phi.set(v, first_free(lists[v], banned));
      }
    }
    return phi;
  }

  static std::vector<Vertex> to_disk(const Subgraph& disk, const std::vector<Vertex>& cycle) {
    std::vector<Vertex> out;
    for (Vertex v : cycle) out.push_back(disk.from_parent[v]);
    return out;
  }

  void color_job(const StackJob& job, const ListAssignment& lists, Coloring& phi) const {
    const int m = static_cast<int>(job.parent.size());
    Coloring psi(m);
    for (Vertex x : job.cycle) {
      if (!phi.has(job.parent[x])) throw Error(ErrorCode::StackExpected, "stack boundary left uncolored");
      psi.set(x, phi[job.parent[x]]);
    }
    const ListAssignment sub_lists = restrict_lists(lists, job.parent);
    // Smallest original id among the admissible designated vertices.
    std::vector<Vertex> order = job.cycle;
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return job.parent[a] < job.parent[b]; });
    Coloring out;
    if (t_ == 3) {
      out = color_3stack(job.disk.graph, job.cycle, order.front(), sub_lists, psi);
    } else {
      const auto v = std::find_if(order.begin(), order.end(),
                                  [&](Vertex x) { return is_active(job.disk.graph, job.cycle, x); });
      if (v == order.end()) throw Error(ErrorCode::StackExpected, "4-stack without an active vertex");
      out = color_4stack(job.disk.graph, job.cycle, *v, sub_lists, psi);
    }
    for (Vertex x = 0; x < m; ++x) {
      if (std::find(job.cycle.begin(), job.cycle.end(), x) == job.cycle.end()) phi.set(job.parent[x], out[x]);
    }
  }

  int c_;
  int t_;
  BoundTracker tracker_;
  PipelineStats* stats_;
};

}  // namespace

std::vector<SeparatingCycle> find_separating_t_cycles(const EmbeddedGraph& g, const FaceStructure& fs, int t) {
  if (t != 3 && t != 4) throw Error(ErrorCode::InvalidInput, "t must be 3 or 4");
  const int n = g.num_vertices();
  std::vector<SeparatingCycle> out;
  std::vector<std::vector<Vertex>> keys;
  for (const auto& cyc : short_cycles(g, t)) {
    if (bounds_a_face(g, fs, cyc)) continue;
    const CycleSides cs = cycle_sides(g, fs, cyc);
    bool left = false, right = false;
    for (auto s : cs.side) {
      left = left || s == CycleSides::Left;
      right = right || s == CycleSides::Right;
    }
    if (!left || !right) continue;
    SeparatingCycle k;
    const auto inside = cs.outer_on_left ? CycleSides::Right : CycleSides::Left;
    for (Vertex v = 0; v < n; ++v) {
      if (cs.side[v] == inside) k.interior.push_back(v);
    }
    k.cycle = cyc;
    if (cs.outer_on_left) std::reverse(k.cycle.begin() + 1, k.cycle.end());
    out.push_back(std::move(k));
  }
  auto key = [](const SeparatingCycle& k) {
    std::vector<Vertex> s = k.cycle;
    std::sort(s.begin(), s.end());
    return s;
  };
  std::sort(out.begin(), out.end(), [&](const SeparatingCycle& a, const SeparatingCycle& b) {
    if (a.interior.size() != b.interior.size()) return a.interior.size() < b.interior.size();
    return key(a) < key(b);
  });

  const int m = static_cast<int>(out.size());
  std::vector<std::vector<bool>> inner(m, std::vector<bool>(n, false));
  for (int i = 0; i < m; ++i) {
    for (Vertex v : out[i].interior) inner[i][v] = true;
  }
  // The closed disk of a lies in the closed disk of b.
  auto inside_of = [&](int a, int b) {
    for (Vertex v : out[a].interior) {
      if (!inner[b][v]) return false;
    }
    for (Vertex v : out[a].cycle) {
      if (!inner[b][v] && std::find(out[b].cycle.begin(), out[b].cycle.end(), v) == out[b].cycle.end()) {
        return false;
      }
    }
    return true;
  };
  for (int i = 0; i < m; ++i) {
    out[i].maximal = true;
    for (int j = m - 1; j > i && out[i].maximal; --j) out[i].maximal = !inside_of(i, j);
  }
  std::vector<bool> taken_inner(n, false), taken_closed(n, false);
  for (int i = m - 1; i >= 0; --i) {
    if (!out[i].maximal) continue;
    bool clash = false;
    for (Vertex v : out[i].interior) clash = clash || taken_closed[v];
    for (Vertex v : out[i].cycle) clash = clash || taken_inner[v];
    if (clash) continue;
    out[i].selected = true;
    for (Vertex v : out[i].interior) taken_inner[v] = taken_closed[v] = true;
    for (Vertex v : out[i].cycle) taken_closed[v] = true;
  }
  return out;
}

std::vector<SeparatingCycle> find_separating_t_cycles(const EmbeddedGraph& g, int t) {
  return find_separating_t_cycles(g, trace_faces(g), t);
}

bool is_c_solitary(const EmbeddedGraph& g, const std::vector<Vertex>& cycle, int c) {
  std::vector<bool> on(g.num_vertices(), false);
  for (Vertex v : cycle) on[v] = true;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (on[v]) continue;
    int count = 0;
    for (Vertex w : g.rotation(v)) count += on[w];
    if (count >= c) return false;
  }
  return true;
}

Coloring color_no_short_separating(const EmbeddedGraph& g, const ListAssignment& lists, int c,
                                   const BoundTracker& tracker, PipelineStats* stats) {
  tight_length(c);
  const int n = g.num_vertices();
  if (static_cast<int>(lists.size()) != n) throw Error(ErrorCode::InvalidInput, "one list per vertex expected");
  if (n == 0) return Coloring(0);
  const FaceStructure fs = trace_faces(g);
  const std::vector<Appearance> system = greedy_maximal_system(g, fs, c);
  std::vector<bool> keep(n, true);
  for (const Appearance& a : system) {
    for (Vertex v : a.image) keep[v] = false;
  }
  const Subgraph rest = induced_subgraph(g, keep);
  const IslandColoring ic = island_coloring(rest.graph, restrict_lists(lists, rest.to_parent), c, tracker.s);
  if (stats) {
    stats->appearances += static_cast<int>(system.size());
    stats->largest_island = std::max(stats->largest_island, ic.largest_island);
  }
  Coloring phi(n);
  for (std::size_t j = 0; j < rest.to_parent.size(); ++j) phi.set(rest.to_parent[j], ic.coloring[j]);
  return extend_over_appearances(g, system, phi, lists);
}

Coloring color_planar(const EmbeddedGraph& g, const ListAssignment& lists, int c,
                      const std::optional<Precoloring>& precolored, const BoundTracker& tracker,
                      PipelineStats* stats) {
  const int t = tight_length(c);
  const int n = g.num_vertices();
  if (static_cast<int>(lists.size()) != n) throw Error(ErrorCode::InvalidInput, "one list per vertex expected");
  const auto gir = girth(g);
  if (gir && *gir < t) throw Error(ErrorCode::GirthViolation, "girth " + std::to_string(*gir) + " below " + std::to_string(t));
  const ListAssignment cut = truncate_lists(lists, c);
  const Extender ext(c, tracker, stats);
  if (!precolored) return ext.solve(g, cut, {}, Coloring(n));

  const auto& cyc = precolored->cycle;
  if (static_cast<int>(cyc.size()) != t) throw Error(ErrorCode::PreconditionViolated, "precolored cycle has the wrong length");
  const FaceStructure fs = trace_faces(g);
  std::vector<Vertex> sorted = cyc;
  std::sort(sorted.begin(), sorted.end());
  const Face& outer = fs.face(fs.outer_face_of(cyc[0]));
  if (!outer.is_cycle || outer.vertices != sorted) {
    throw Error(ErrorCode::PreconditionViolated, "precolored cycle does not bound the outer face");
  }
  for (Vertex v : cyc) {
    if (!precolored->psi.has(v) || !list_contains(cut[v], precolored->psi[v])) {
      throw Error(ErrorCode::PreconditionViolated, "precoloring is not a list coloring of the cycle");
    }
  }
  return ext.solve(g, cut, cyc, precolored->psi);
}

MainResult color_main(const EmbeddedGraph& g, const ListAssignment& lists, int c, const BoundTracker& tracker) {
  const int t = tight_length(c);
  const int n = g.num_vertices();
  if (static_cast<int>(lists.size()) != n) throw Error(ErrorCode::InvalidInput, "one list per vertex expected");
  const auto gir = girth(g);
  if (gir && *gir < t) throw Error(ErrorCode::GirthViolation, "girth " + std::to_string(*gir) + " below " + std::to_string(t));
  const ListAssignment cut = truncate_lists(lists, c);

  MainResult res;
  res.tracker = tracker;
  res.bound = tracker.ell();
  res.coloring = Coloring(n);
  for (const auto& comp : connected_components(g)) {
    const Subgraph sub = induced_subgraph(g, comp);
    const Coloring part = color_planar(sub.graph, restrict_lists(cut, sub.to_parent), c, std::nullopt, tracker, &res.stats);
    for (std::size_t j = 0; j < sub.to_parent.size(); ++j) res.coloring.set(sub.to_parent[j], part[j]);
  }
  res.report = verify_coloring(g, res.coloring, &cut, VerifyMode::weak(res.bound));
  res.max_weak_diameter = res.report.max_metric;
  return res;
}

}  // namespace wdc
