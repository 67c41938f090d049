#include "wdc/oracle.hpp"

#include <algorithm>
#include <sstream>

#include "wdc/error.hpp"
#include "wdc/generators.hpp"

namespace wdc {

namespace {

// Number of colorings, or budget + 1 once it is exceeded.
long long count_colorings(int colors, int free_vertices, long long budget) {
  long long total = 1;
  for (int i = 0; i < free_vertices; ++i) {
    total *= colors;
    if (total > budget) return budget + 1;
  }
  return total;
}

std::vector<std::vector<int>> all_distances(const EmbeddedGraph& g) {
  const int n = g.num_vertices();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, -1));
  for (Vertex s = 0; s < n; ++s) {
    auto& row = d[s];
    std::vector<Vertex> queue{s};
    row[s] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      for (Vertex y : g.rotation(queue[h])) {
        if (row[y] < 0) {
          row[y] = row[queue[h]] + 1;
          queue.push_back(y);
        }
      }
    }
  }
  return d;
}

struct Scratch {
  std::vector<int> comp;
  std::vector<Vertex> members;
  std::vector<int> dist;
  std::vector<Vertex> queue;
};

// Component ids per vertex under `color`; returns the count.
int label_components(const EmbeddedGraph& g, const std::vector<Color>& color, std::vector<int>& comp) {
  const int n = g.num_vertices();
  comp.assign(n, -1);
  int count = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = count;
    stack.assign(1, s);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.rotation(x)) {
        if (comp[y] < 0 && color[y] == color[s]) {
          comp[y] = count;
          stack.push_back(y);
        }
      }
    }
    ++count;
  }
  return count;
}

// Largest internal distance from `source` to a vertex of its component.
int eccentricity_inside(const EmbeddedGraph& g, const std::vector<int>& comp, Vertex source, Scratch& sc) {
  sc.dist.assign(g.num_vertices(), -1);
  sc.queue.assign(1, source);
  sc.dist[source] = 0;
  int best = 0;
  for (std::size_t h = 0; h < sc.queue.size(); ++h) {
    const Vertex x = sc.queue[h];
    best = std::max(best, sc.dist[x]);
    for (Vertex y : g.rotation(x)) {
      if (sc.dist[y] < 0 && comp[y] == comp[source]) {
        sc.dist[y] = sc.dist[x] + 1;
        sc.queue.push_back(y);
      }
    }
  }
  return best;
}

Coloring to_coloring(const std::vector<Color>& color) {
  Coloring phi(static_cast<int>(color.size()));
  for (std::size_t v = 0; v < color.size(); ++v) phi.set(static_cast<Vertex>(v), color[v]);
  return phi;
}

// Advances the free positions like an odometer over 1..colors; false after
// the last combination.
bool advance(std::vector<Color>& color, const std::vector<Vertex>& free_vertices, int colors) {
  for (Vertex v : free_vertices) {
    if (color[v] < colors) {
      ++color[v];
      return true;
    }
    color[v] = 1;
  }
  return false;
}

std::string format_multiset(const std::vector<Color>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "}";
}

}  // namespace

std::string OracleReport::to_text() const {
  std::ostringstream os;
  os << "checked=" << instances_checked << " worst=" << worst_value << " verdict=" << (pass ? "pass" : "fail");
  if (worst_case) {
    os << " witness=";
    for (int v = 0; v < worst_case->size(); ++v) os << (v ? "," : "") << (*worst_case)[v];
  }
  if (!detail.empty()) os << " " << detail;
  return os.str();
}

MinMaxResult min_max_mono_diameter(const EmbeddedGraph& g, int num_colors, Metric metric, const Coloring& fixed,
                                   long long budget) {
  const int n = g.num_vertices();
  if (num_colors < 1) throw Error(ErrorCode::InvalidInput, "need at least one color");
  std::vector<Vertex> free_vertices;
  std::vector<Color> color(n, 1);
  for (Vertex v = 0; v < n; ++v) {
    if (v < fixed.size() && fixed.has(v)) color[v] = fixed[v];
    else free_vertices.push_back(v);
  }
  if (count_colorings(num_colors, static_cast<int>(free_vertices.size()), budget) > budget) {
    throw Error(ErrorCode::BudgetExceeded, std::to_string(num_colors) + "^" +
                                               std::to_string(free_vertices.size()) + " colorings");
  }
  const auto dist = metric == Metric::Weak ? all_distances(g) : std::vector<std::vector<int>>{};
  MinMaxResult res;
  res.value = -1;
  Scratch sc;
  std::vector<std::vector<Vertex>> groups;
  do {
    ++res.colorings;
    const int count = label_components(g, color, sc.comp);
    groups.assign(count, {});
    for (Vertex v = 0; v < n; ++v) groups[sc.comp[v]].push_back(v);
    int worst = 0;
    for (const auto& grp : groups) {
      if (res.value >= 0 && worst >= res.value) break;
      if (grp.size() < 2) continue;
      for (Vertex a : grp) {
        if (metric == Metric::Weak) {
          for (Vertex b : grp) worst = std::max(worst, dist[a][b]);
        } else {
          worst = std::max(worst, eccentricity_inside(g, sc.comp, a, sc));
        }
      }
    }
    if (res.value < 0 || worst < res.value) {
      res.value = worst;
      res.witness = to_coloring(color);
    }
  } while (advance(color, free_vertices, num_colors));
  return res;
}

OracleReport verify_lemma_nomo(int i, int k, long long budget) {
  const InterfacedGraph h = gen_H(i, k);
  const EmbeddedGraph& g = h.graph;
  const int n = g.num_vertices();
  std::vector<Vertex> free_vertices;
  for (Vertex v = 0; v < n; ++v) {
    if (v != h.u && v != h.v) free_vertices.push_back(v);
  }
  if (count_colorings(2, static_cast<int>(free_vertices.size()), budget) > budget) {
    throw Error(ErrorCode::BudgetExceeded, "2^" + std::to_string(free_vertices.size()) + " colorings");
  }
  std::vector<Color> color(n, 1);
  OracleReport rep;
  rep.worst_value = i;
  Scratch sc;
  do {
    ++rep.instances_checked;
    label_components(g, color, sc.comp);
    bool long_second_color = false;
    for (Vertex a = 0; a < n && !long_second_color; ++a) {
      if (color[a] != 2) continue;
      if (eccentricity_inside(g, sc.comp, a, sc) >= k - 1) long_second_color = true;
    }
    if (long_second_color) continue;
    if (sc.comp[h.u] == sc.comp[h.v]) continue;
    const int r = eccentricity_inside(g, sc.comp, h.u, sc) + eccentricity_inside(g, sc.comp, h.v, sc);
    if (!rep.worst_case || r < rep.worst_value) {
      rep.worst_value = r;
      rep.worst_case = to_coloring(color);
    }
    if (r < i) {
      rep.pass = false;
      rep.detail = "all three disjuncts fail";
      return rep;
    }
  } while (advance(color, free_vertices, 2));
  return rep;
}

OracleReport verify_hprime(int i, int k, long long budget) {
  const InterfacedGraph h = gen_Hprime(i, k);
  Coloring fixed(h.graph.num_vertices());
  fixed.set(h.u, 1);
  fixed.set(h.v, 2);
  const MinMaxResult mm = min_max_mono_diameter(h.graph, 3, Metric::Internal, fixed, budget);
  OracleReport rep;
  rep.instances_checked = mm.colorings;
  rep.worst_value = mm.value;
  rep.worst_case = mm.witness;
  rep.pass = mm.value >= std::min(k - 1, i);
  return rep;
}

HexWitness hex_crossing(int n, const Coloring& phi) {
  const EmbeddedGraph g = gen_triangulated_grid(n);
  const int total = n * n;
  for (Color col : {1, 2}) {
    std::vector<int> parent(total, -2);
    std::vector<Vertex> queue;
    for (int j = 0; j < n; ++j) {
      const Vertex s = col == 1 ? j * n : j;
      if (phi[s] == col) {
        parent[s] = -1;
        queue.push_back(s);
      }
    }
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const Vertex x = queue[h];
      const bool reached = col == 1 ? x % n == n - 1 : x / n == n - 1;
      if (reached) {
        HexWitness w{col, {}};
        for (Vertex y = x; y >= 0; y = parent[y]) w.path.push_back(y);
        std::reverse(w.path.begin(), w.path.end());
        return w;
      }
      for (Vertex y : g.rotation(x)) {
        if (parent[y] == -2 && phi[y] == col) {
          parent[y] = x;
          queue.push_back(y);
        }
      }
    }
  }
  throw Error(ErrorCode::NoWitness, "no monochromatic crossing");
}

OracleReport verify_hex(int n, long long budget) {
  const int total = n * n;
  if (count_colorings(2, total, budget) > budget) {
    throw Error(ErrorCode::BudgetExceeded, "2^" + std::to_string(total) + " colorings");
  }
  std::vector<Color> color(total, 1);
  std::vector<Vertex> all(total);
  for (int v = 0; v < total; ++v) all[v] = v;
  OracleReport rep;
  do {
    ++rep.instances_checked;
    const HexWitness w = hex_crossing(n, to_coloring(color));
    rep.worst_value = std::max(rep.worst_value, static_cast<int>(w.path.size()));
  } while (advance(color, all, 2));
  return rep;
}

namespace {

void subsets(int universe, int size, int from, std::vector<Color>& cur, std::vector<ColorList>& out) {
  if (static_cast<int>(cur.size()) == size) {
    out.push_back(cur);
    return;
  }
  for (Color a = from; a <= universe; ++a) {
    cur.push_back(a);
    subsets(universe, size, a + 1, cur, out);
    cur.pop_back();
  }
}

// One multiset per class: multiplicities 0..2 for each list color, and a
// colors of multiplicity one plus b of multiplicity two outside the list.
std::vector<Multiset> multiset_classes(const ColorList& list, int universe, int cap) {
  std::vector<Color> outside;
  for (Color a = 1; a <= universe; ++a) {
    if (!list_contains(list, a)) outside.push_back(a);
  }
  const int c = static_cast<int>(list.size());
  std::vector<Multiset> out;
  std::vector<int> mult(c, 0);
  while (true) {
    int inside = 0;
    for (int m : mult) inside += m;
    for (int singles = 0; singles <= static_cast<int>(outside.size()); ++singles) {
      for (int doubles = 0; singles + doubles <= static_cast<int>(outside.size()); ++doubles) {
        if (inside + singles + 2 * doubles > cap) continue;
        Multiset b;
        for (int j = 0; j < c; ++j) b.insert(b.end(), mult[j], list[j]);
        for (int j = 0; j < singles; ++j) b.push_back(outside[j]);
        for (int j = singles; j < singles + doubles; ++j) b.insert(b.end(), 2, outside[j]);
        std::sort(b.begin(), b.end());
        out.push_back(std::move(b));
      }
    }
    int j = 0;
    while (j < c && mult[j] == 2) mult[j++] = 0;
    if (j == c) break;
    ++mult[j];
  }
  return out;
}

}  // namespace

OracleReport exhaustive_sparsifier_check(SparsifierId id, int universe) {
  const Sparsifier& s = sparsifier(id);
  OracleReport rep;
  if (universe < s.c) {
    rep.detail = "vacuous: universe smaller than list size";
    return rep;
  }
  std::vector<ColorList> all_lists;
  std::vector<Color> cur;
  subsets(universe, s.c, 1, cur, all_lists);

  ListAssignment lists(s.size);
  MultiAssignment b(s.size);
  std::vector<std::vector<Multiset>> classes(s.size);
  auto check_all_b = [&]() {
    for (int v = 0; v < s.size; ++v) classes[v] = multiset_classes(lists[v], universe, s.gamma[v] - s.degree(v));
    std::vector<std::size_t> idx(s.size, 0);
    for (int v = 0; v < s.size; ++v) b[v] = classes[v][0];
    std::vector<Color> phi;
    while (true) {
      ++rep.instances_checked;
      bool ok = true;
      try {
        color_sparsifier_into(id, lists, b, phi);
        for (int v = 0; v < s.size; ++v) ok = ok && list_contains(lists[v], phi[v]);
        ok = ok && is_B_opaque(s, phi, b);
      } catch (const Error&) {
        ok = false;
      }
      if (!ok) {
        std::string what = std::string(to_string(id)) + " fails for";
        for (int v = 0; v < s.size; ++v) {
          what += " L" + std::to_string(v) + "=" + format_multiset(lists[v]) + " B" + std::to_string(v) + "=" +
                  format_multiset(b[v]);
        }
        throw Error(ErrorCode::CounterexampleFound, what);
      }
      int v = 0;
      while (v < s.size && ++idx[v] == classes[v].size()) {
        idx[v] = 0;
        b[v] = classes[v][0];
        ++v;
      }
      if (v == s.size) break;
      b[v] = classes[v][idx[v]];
    }
  };
  // Lists in first-occurrence order: new colors enter as the smallest unused.
  auto assign = [&](auto&& self, int v, int used) -> void {
    if (v == s.size) {
      check_all_b();
      return;
    }
    for (const ColorList& l : all_lists) {
      int fresh = 0;
      bool ok = true;
      for (Color a : l) {
        if (a > used) {
          ++fresh;
          if (a != used + fresh) ok = false;
        }
      }
      if (!ok) continue;
      lists[v] = l;
      self(self, v + 1, used + fresh);
    }
  };
  assign(assign, 0, 0);
  rep.detail = "universe=" + std::to_string(universe);
  return rep;
}

}  // namespace wdc
