#pragma once

// Slow, obviously-correct reference computations used to cross-check the
// library in tests.

#include <algorithm>
#include <climits>
#include <cstdint>
#include <functional>
#include <map>
#include <tuple>
#include <set>
#include <vector>

#include "wdc/graph.hpp"
#include "wdc/random.hpp"

namespace ref {

using wdc::EmbeddedGraph;
using wdc::Vertex;

inline constexpr int kInf = INT_MAX / 4;

inline std::vector<std::vector<int>> all_pairs(const EmbeddedGraph& g, const std::vector<bool>* allowed = nullptr) {
  const int n = g.num_vertices();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (int v = 0; v < n; ++v) {
    d[v][v] = 0;
    for (int w : g.rotation(v)) {
      if (!allowed || ((*allowed)[v] && (*allowed)[w])) d[v][w] = 1;
    }
  }
  for (int k = 0; k < n; ++k) {
    if (allowed && !(*allowed)[k]) continue;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  }
  return d;
}

// Exhaustive simple-cycle search; 0 for forests.
inline int girth(const EmbeddedGraph& g) {
  const int n = g.num_vertices();
  int best = 0;
  std::vector<bool> on(n, false);
  std::function<void(int, int, int)> dfs = [&](int start, int v, int len) {
    for (int w : g.rotation(v)) {
      if (w == start && len >= 3) {
        if (best == 0 || len < best) best = len;
      }
      if (w > start && !on[w]) {
        on[w] = true;
        dfs(start, w, len + 1);
        on[w] = false;
      }
    }
  };
  for (int s = 0; s < n; ++s) {
    on[s] = true;
    dfs(s, s, 1);
    on[s] = false;
  }
  return best;
}

// Face count by following successor pointers on an explicit dart set.
inline std::multiset<int> face_lengths(const EmbeddedGraph& g) {
  std::set<std::pair<int, int>> seen;
  std::multiset<int> out;
  for (int v = 0; v < g.num_vertices(); ++v) {
    for (int w : g.rotation(v)) {
      if (seen.count({v, w})) continue;
      int len = 0;
      int a = v, b = w;
      while (!seen.count({a, b})) {
        seen.insert({a, b});
        ++len;
        const auto& r = g.rotation(b);
        const int i = static_cast<int>(std::find(r.begin(), r.end(), a) - r.begin());
        const int c = r[(i + static_cast<int>(r.size()) - 1) % r.size()];
        a = b;
        b = c;
      }
      out.insert(len);
    }
  }
  return out;
}

inline bool connected(const EmbeddedGraph& g, const std::vector<Vertex>& set) {
  if (set.empty()) return true;
  std::vector<bool> in(g.num_vertices(), false), seen(g.num_vertices(), false);
  for (Vertex v : set) in[v] = true;
  std::vector<Vertex> st{set[0]};
  seen[set[0]] = true;
  std::size_t count = 0;
  while (!st.empty()) {
    const Vertex x = st.back();
    st.pop_back();
    ++count;
    for (Vertex y : g.rotation(x)) {
      if (in[y] && !seen[y]) {
        seen[y] = true;
        st.push_back(y);
      }
    }
  }
  return count == set.size();
}

// Straight-line plane graph on random lattice points: candidate segments in
// order of length, each kept if it crosses nothing kept before and (when
// triangle_free) closes no triangle.
struct Drawing {
  std::vector<std::pair<double, double>> points;
  std::vector<std::pair<Vertex, Vertex>> edges;
  EmbeddedGraph graph;
};

inline Drawing random_drawing(int n, bool triangle_free, std::uint64_t seed, double keep = 1.0) {
  wdc::Rng rng(seed);
  Drawing d;
  std::set<std::pair<int, int>> used;
  while (static_cast<int>(d.points.size()) < n) {
    const int x = rng.uniform_int(0, 1000), y = rng.uniform_int(0, 1000);
    if (used.insert({x, y}).second) d.points.emplace_back(x, y);
  }
  using P = std::pair<double, double>;
  auto cross = [](P o, P a, P b) { return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first); };
  auto proper = [&](P a, P b, P c, P e) {
    const double d1 = cross(a, b, c), d2 = cross(a, b, e), d3 = cross(c, e, a), d4 = cross(c, e, b);
    return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
  };
  auto on_segment = [&](P a, P b, P p) {
    return cross(a, b, p) == 0 && std::min(a.first, b.first) <= p.first && p.first <= std::max(a.first, b.first) &&
           std::min(a.second, b.second) <= p.second && p.second <= std::max(a.second, b.second);
  };
  std::vector<std::tuple<double, Vertex, Vertex>> cand;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      const double dx = d.points[a].first - d.points[b].first, dy = d.points[a].second - d.points[b].second;
      cand.emplace_back(dx * dx + dy * dy, a, b);
    }
  }
  std::sort(cand.begin(), cand.end());
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& [len, a, b] : cand) {
    bool ok = rng.bernoulli(keep);
    for (Vertex v = 0; v < n && ok; ++v) {
      if (v != a && v != b && on_segment(d.points[a], d.points[b], d.points[v])) ok = false;
    }
    for (const auto& [c, e] : d.edges) {
      if (!ok) break;
      if (c == a || c == b || e == a || e == b) continue;
      if (proper(d.points[a], d.points[b], d.points[c], d.points[e])) ok = false;
    }
    if (ok && triangle_free) {
      for (Vertex w = 0; w < n; ++w) ok = ok && !(adj[a][w] && adj[b][w]);
    }
    if (!ok) continue;
    d.edges.emplace_back(a, b);
    adj[a][b] = adj[b][a] = true;
  }
  d.graph = wdc::straight_line_embedding(d.points, d.edges);
  return d;
}

// Strictly inside the polygon (even-odd rule; points on the boundary are
// never vertices here).
inline bool inside_polygon(const std::vector<std::pair<double, double>>& poly, std::pair<double, double> p) {
  bool in = false;
  for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
    const auto [xi, yi] = poly[i];
    const auto [xj, yj] = poly[j];
    if ((yi > p.second) != (yj > p.second) && p.first < (xj - xi) * (p.second - yi) / (yj - yi) + xi) in = !in;
  }
  return in;
}

// Separating t-cycles by geometry: sorted vertex set -> vertices inside.
inline std::map<std::vector<Vertex>, std::vector<Vertex>> separating_by_geometry(const Drawing& d, int t) {
  const EmbeddedGraph& g = d.graph;
  const int n = g.num_vertices();
  std::map<std::vector<Vertex>, std::vector<Vertex>> out;
  std::vector<Vertex> path;
  std::function<void()> grow = [&]() {
    const Vertex last = path.back();
    if (static_cast<int>(path.size()) == t) {
      if (!g.adjacent(last, path.front()) || path[1] > path.back()) return;
      std::vector<std::pair<double, double>> poly;
      for (Vertex v : path) poly.push_back(d.points[v]);
      std::vector<Vertex> in;
      int outside = 0;
      for (Vertex v = 0; v < n; ++v) {
        if (std::find(path.begin(), path.end(), v) != path.end()) continue;
        if (inside_polygon(poly, d.points[v])) {
          in.push_back(v);
        } else {
          ++outside;
        }
      }
      if (!in.empty() && outside > 0) {
        std::vector<Vertex> key = path;
        std::sort(key.begin(), key.end());
        out[key] = in;
      }
      return;
    }
    for (Vertex w : g.rotation(last)) {
      if (w <= path.front() || std::find(path.begin(), path.end(), w) != path.end()) continue;
      path.push_back(w);
      grow();
      path.pop_back();
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    path = {s};
    grow();
  }
  return out;
}

}  // namespace ref
