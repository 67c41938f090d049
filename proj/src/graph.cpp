#include "wdc/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "wdc/error.hpp"

namespace wdc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::EulerViolation: return "EulerViolation";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::UncoloredVertex: return "UncoloredVertex";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NoWitness: return "NoWitness";
    case ErrorCode::CounterexampleFound: return "CounterexampleFound";
    case ErrorCode::IslandSearchFailed: return "IslandSearchFailed";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotAStack: return "NotAStack";
    case ErrorCode::NotActive: return "NotActive";
    case ErrorCode::StackExpected: return "StackExpected";
    case ErrorCode::GirthViolation: return "GirthViolation";
  }
  return "Unknown";
}

EmbeddedGraph::EmbeddedGraph(std::vector<std::vector<Vertex>> rotations,
                             std::optional<Dart> outer_marker)
    : rot_(std::move(rotations)), outer_(outer_marker) {
  const int n = num_vertices();
  lookup_.resize(n);
  offsets_.resize(n + 1, 0);
  int darts = 0;
  for (Vertex v = 0; v < n; ++v) {
    auto& lk = lookup_[v];
    lk.reserve(rot_[v].size());
    for (int i = 0; i < static_cast<int>(rot_[v].size()); ++i) {
      const Vertex w = rot_[v][i];
      if (w < 0 || w >= n) {
        throw Error(ErrorCode::InvalidInput,
                    "vertex " + std::to_string(v) + " lists unknown neighbour " + std::to_string(w));
      }
      if (w == v) throw Error(ErrorCode::InvalidInput, "loop at vertex " + std::to_string(v));
      lk.emplace_back(w, i);
    }
    std::sort(lk.begin(), lk.end());
    for (std::size_t i = 1; i < lk.size(); ++i) {
      if (lk[i].first == lk[i - 1].first) {
        throw Error(ErrorCode::InvalidInput, "parallel edge " + std::to_string(v) + "-" +
                                                 std::to_string(lk[i].first));
      }
    }
    offsets_[v] = darts;
    darts += static_cast<int>(rot_[v].size());
  }
  offsets_[n] = darts;
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : rot_[v]) {
      if (position(w, v) < 0) {
        throw Error(ErrorCode::InvalidInput, "edge " + std::to_string(v) + "-" + std::to_string(w) +
                                                 " missing from the rotation of " + std::to_string(w));
      }
    }
  }
  num_edges_ = darts / 2;
  if (outer_ && (outer_->from < 0 || outer_->from >= n || position(outer_->from, outer_->to) < 0)) {
    throw Error(ErrorCode::InvalidInput, "outer marker is not an edge");
  }
}

int EmbeddedGraph::position(Vertex v, Vertex w) const {
  const auto& lk = lookup_[v];
  auto it = std::lower_bound(lk.begin(), lk.end(), std::pair<Vertex, int>{w, -1});
  if (it == lk.end() || it->first != w) return -1;
  return it->second;
}

Vertex EmbeddedGraph::successor(Vertex v, Vertex w) const {
  const auto& r = rot_[v];
  const int i = position(v, w);
  return r[(i + 1) % r.size()];
}

Vertex EmbeddedGraph::predecessor(Vertex v, Vertex w) const {
  const auto& r = rot_[v];
  const int i = position(v, w);
  return r[(i + r.size() - 1) % r.size()];
}

std::vector<std::pair<Vertex, Vertex>> EmbeddedGraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(num_edges_);
  for (Vertex v = 0; v < num_vertices(); ++v) {
    for (const auto& [w, idx] : lookup_[v]) {
      if (v < w) out.emplace_back(v, w);
    }
  }
  return out;
}

int EmbeddedGraph::dart_index(Vertex from, Vertex to) const {
  const int p = position(from, to);
  return p < 0 ? -1 : offsets_[from] + p;
}

Dart EmbeddedGraph::dart(int index) const {
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), index);
  const Vertex v = static_cast<Vertex>(it - offsets_.begin()) - 1;
  return {v, rot_[v][index - offsets_[v]]};
}

bool Coloring::complete() const {
  return std::all_of(colors_.begin(), colors_.end(), [](const auto& c) { return c.has_value(); });
}

ListAssignment uniform_lists(int n, int k, Color first) {
  ColorList list(k);
  std::iota(list.begin(), list.end(), first);
  return ListAssignment(static_cast<std::size_t>(n), list);
}

ListAssignment truncate_lists(const ListAssignment& lists, int c) {
  ListAssignment out;
  out.reserve(lists.size());
  for (std::size_t v = 0; v < lists.size(); ++v) {
    ColorList l = lists[v];
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
    if (static_cast<int>(l.size()) < c) {
      throw Error(ErrorCode::PreconditionViolated,
                  "list of vertex " + std::to_string(v) + " has fewer than " + std::to_string(c) + " colors");
    }
    l.resize(c);
    out.push_back(std::move(l));
  }
  return out;
}

bool list_contains(const ColorList& list, Color c) {
  return std::find(list.begin(), list.end(), c) != list.end();
}

std::vector<int> component_ids(const EmbeddedGraph& g, int* count) {
  const int n = g.num_vertices();
  std::vector<int> comp(n, -1);
  int next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.rotation(x)) {
        if (comp[y] < 0) {
          comp[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return comp;
}

EmbeddedGraph straight_line_embedding(std::span<const std::pair<double, double>> points,
                                      std::span<const std::pair<Vertex, Vertex>> edges) {
  const int n = static_cast<int>(points.size());
  std::vector<std::vector<Vertex>> rot(n);
  for (const auto& [a, b] : edges) {
    rot[a].push_back(b);
    rot[b].push_back(a);
  }
  auto angle = [&](Vertex from, Vertex to) {
    return std::atan2(points[to].second - points[from].second, points[to].first - points[from].first);
  };
  for (Vertex v = 0; v < n; ++v) {
    std::sort(rot[v].begin(), rot[v].end(),
              [&](Vertex x, Vertex y) { return angle(v, x) < angle(v, y); });
  }
  std::optional<Dart> marker;
  Vertex low = -1;
  for (Vertex v = 0; v < n; ++v) {
    if (rot[v].empty()) continue;
    if (low < 0 || points[v].second < points[low].second ||
        (points[v].second == points[low].second && points[v].first < points[low].first)) {
      low = v;
    }
  }
  // Every neighbour of the lowest vertex has direction in [0, pi), so the
  // corner after the last one contains the downward direction.
  if (low >= 0) marker = Dart{low, rot[low].back()};
  return EmbeddedGraph(std::move(rot), marker);
}

}  // namespace wdc
