#include "wdc/metrics.hpp"

#include <algorithm>
#include <sstream>

#include "wdc/error.hpp"

namespace wdc {

namespace {

constexpr int kUnseen = -1;

// Raw BFS; kUnseen marks unreachable vertices and never leaves this file.
void bfs(const EmbeddedGraph& g, Vertex source, const std::vector<bool>* allowed, std::vector<int>& dist,
         std::vector<Vertex>& queue) {
  std::fill(dist.begin(), dist.end(), kUnseen);
  queue.clear();
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    for (Vertex y : g.rotation(x)) {
      if (dist[y] != kUnseen || (allowed && !(*allowed)[y])) continue;
      dist[y] = dist[x] + 1;
      queue.push_back(y);
    }
  }
}

Distance diameter_over(const EmbeddedGraph& g, const std::vector<Vertex>& set, const std::vector<bool>* allowed) {
  if (set.empty()) throw Error(ErrorCode::EmptySet, "diameter of an empty set");
  std::vector<int> dist(g.num_vertices());
  std::vector<Vertex> queue;
  int best = 0;
  for (Vertex s : set) {
    bfs(g, s, allowed, dist, queue);
    for (Vertex t : set) {
      if (dist[t] == kUnseen) return std::nullopt;
      best = std::max(best, dist[t]);
    }
  }
  return best;
}

}  // namespace

std::vector<Distance> distances_from(const EmbeddedGraph& g, Vertex source, const std::vector<bool>* allowed) {
  std::vector<int> dist(g.num_vertices());
  std::vector<Vertex> queue;
  bfs(g, source, allowed, dist, queue);
  std::vector<Distance> out(dist.size());
  for (std::size_t i = 0; i < dist.size(); ++i) {
    if (dist[i] != kUnseen) out[i] = dist[i];
  }
  return out;
}

std::optional<int> girth(const EmbeddedGraph& g) {
  const int n = g.num_vertices();
  std::vector<int> dist(n), parent(n);
  std::vector<Vertex> queue;
  std::optional<int> best;
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    dist[s] = 0;
    parent[s] = -1;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex x = queue[head];
      if (best && 2 * dist[x] + 1 >= *best) break;
      for (Vertex y : g.rotation(x)) {
        if (dist[y] == kUnseen) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (parent[x] != y) {
          const int len = dist[x] + dist[y] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

Distance weak_diameter(const EmbeddedGraph& g, const std::vector<Vertex>& set) {
  return diameter_over(g, set, nullptr);
}

Distance internal_diameter(const EmbeddedGraph& g, const std::vector<Vertex>& set) {
  std::vector<bool> mask(g.num_vertices(), false);
  for (Vertex v : set) mask[v] = true;
  return diameter_over(g, set, &mask);
}

std::vector<std::vector<Vertex>> monochromatic_components(const EmbeddedGraph& g, const Coloring& phi) {
  const int n = g.num_vertices();
  for (Vertex v = 0; v < n; ++v) {
    if (v >= phi.size() || !phi.has(v)) {
      throw Error(ErrorCode::UncoloredVertex, "vertex " + std::to_string(v) + " has no color");
    }
  }
  std::vector<int> comp(n, -1);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    comp[s] = id;
    stack.assign(1, s);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      out[id].push_back(x);
      for (Vertex y : g.rotation(x)) {
        if (comp[y] < 0 && phi[y] == phi[s]) {
          comp[y] = id;
          stack.push_back(y);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

ColoringReport verify_coloring(const EmbeddedGraph& g, const Coloring& phi, const ListAssignment* lists,
                               VerifyMode mode) {
  ColoringReport rep;
  const int n = g.num_vertices();
  for (Vertex v = 0; v < n; ++v) {
    if (v >= phi.size() || !phi.has(v)) {
      rep.colored = false;
      continue;
    }
    if (lists && !list_contains((*lists)[v], phi[v])) {
      rep.lists_respected = false;
      rep.list_violations.push_back(v);
    }
  }
  if (!rep.colored) {
    rep.pass = false;
    rep.within_bound = false;
    return rep;
  }
  rep.components = monochromatic_components(g, phi);
  std::vector<int> dist(n);
  std::vector<Vertex> queue;
  std::vector<bool> mask(n, false);
  rep.max_metric = 0;
  for (const auto& comp : rep.components) {
    Distance m;
    if (mode.kind == VerifyMode::Clustering) {
      m = static_cast<int>(comp.size());
    } else if (comp.size() == 1) {
      m = 0;
    } else {
      const bool internal = mode.kind == VerifyMode::InternalDiameter;
      if (internal) {
        for (Vertex v : comp) mask[v] = true;
      }
      int best = 0;
      bool reachable = true;
      for (Vertex s : comp) {
        bfs(g, s, internal ? &mask : nullptr, dist, queue);
        for (Vertex t : comp) {
          if (dist[t] == kUnseen) reachable = false;
          else best = std::max(best, dist[t]);
        }
      }
      if (internal) {
        for (Vertex v : comp) mask[v] = false;
      }
      if (reachable) m = best;
    }
    rep.metric.push_back(m);
    if (!m) rep.max_metric.reset();
    else if (rep.max_metric) rep.max_metric = std::max(*rep.max_metric, *m);
  }
  rep.within_bound = rep.max_metric && *rep.max_metric <= mode.bound;
  rep.pass = rep.within_bound && rep.lists_respected;
  return rep;
}

std::string ColoringReport::summary() const {
  std::ostringstream os;
  os << "colored=" << (colored ? "yes" : "no") << " lists=" << (lists_respected ? "ok" : "violated")
     << " components=" << components.size() << " max=";
  if (max_metric) os << *max_metric;
  else os << "unbounded";
  os << " verdict=" << (pass ? "pass" : "fail");
  return os.str();
}

}  // namespace wdc
