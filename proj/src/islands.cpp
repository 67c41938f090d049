#include "wdc/islands.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "wdc/error.hpp"

namespace wdc {

namespace {

class IslandSearch {
 public:
  IslandSearch(const EmbeddedGraph& g, int c, const std::vector<bool>& alive)
      : g_(g), c_(c), alive_(alive), in_set_(g.num_vertices(), false) {}

  // Depth-first growth from `seed` within `bound` vertices.
  bool grow_from(Vertex seed, int bound) {
    bound_ = bound;
    members_.assign(1, seed);
    in_set_[seed] = true;
    const bool found = extend();
    if (!found) in_set_[seed] = false;
    return found;
  }

  void reset_memo() { tried_.clear(); }

  Island result() {
    Island island;
    island.members = members_;
    std::sort(island.members.begin(), island.members.end());
    for (Vertex v : island.members) island.boundary_degrees.push_back(outside(v));
    for (Vertex v : members_) in_set_[v] = false;
    return island;
  }

 private:
  int outside(Vertex v) const {
    int count = 0;
    for (Vertex w : g_.rotation(v)) count += alive_[w] && !in_set_[w];
    return count;
  }

  bool extend() {
    Vertex violating = -1;
    int deficit = 0;
    for (Vertex v : members_) {
      const int excess = outside(v) - (c_ - 1);
      if (excess > 0 && violating < 0) violating = v;
      deficit = std::max(deficit, excess);
    }
    if (violating < 0) return true;
    const int size = static_cast<int>(members_.size());
    // Each added vertex lowers a member's outside count by at most one.
    if (size + deficit > bound_) return false;
    std::vector<Vertex> key = members_;
    std::sort(key.begin(), key.end());
    if (!tried_.insert(std::move(key)).second) return false;
    std::vector<Vertex> options;
    for (Vertex w : g_.rotation(violating)) {
      if (alive_[w] && !in_set_[w]) options.push_back(w);
    }
    std::sort(options.begin(), options.end());
    for (Vertex w : options) {
      members_.push_back(w);
      in_set_[w] = true;
      if (extend()) return true;
      in_set_[w] = false;
      members_.pop_back();
    }
    return false;
  }

  const EmbeddedGraph& g_;
  int c_;
  const std::vector<bool>& alive_;
  std::vector<bool> in_set_;
  std::vector<Vertex> members_;
  std::set<std::vector<Vertex>> tried_;
  int bound_ = 0;
};

}  // namespace

std::optional<Island> find_c_island(const EmbeddedGraph& g, int c, int s_max, const std::vector<bool>* alive) {
  const int n = g.num_vertices();
  const std::vector<bool> everything(n, true);
  const std::vector<bool>& live = alive ? *alive : everything;
  if (c < 1) throw Error(ErrorCode::InvalidInput, "c must be positive");
  IslandSearch search(g, c, live);
  for (int bound = 1; bound <= s_max; ++bound) {
    search.reset_memo();
    for (Vertex seed = 0; seed < n; ++seed) {
      if (live[seed] && search.grow_from(seed, bound)) return search.result();
    }
  }
  return std::nullopt;
}

bool is_c_island(const EmbeddedGraph& g, int c, const std::vector<Vertex>& members, const std::vector<bool>* alive) {
  if (members.empty()) return false;
  std::vector<bool> in_set(g.num_vertices(), false);
  for (Vertex v : members) in_set[v] = true;
  for (Vertex v : members) {
    int count = 0;
    for (Vertex w : g.rotation(v)) count += (!alive || (*alive)[w]) && !in_set[w];
    if (count >= c) return false;
  }
  return true;
}

IslandColoring island_coloring(const EmbeddedGraph& g, const ListAssignment& lists, int c, int s_max) {
  const int n = g.num_vertices();
  if (static_cast<int>(lists.size()) != n) throw Error(ErrorCode::InvalidInput, "one list per vertex required");
  for (Vertex v = 0; v < n; ++v) {
    if (static_cast<int>(lists[v].size()) < c) {
      throw Error(ErrorCode::PreconditionViolated, "list of vertex " + std::to_string(v) + " is shorter than c");
    }
  }
  IslandColoring out{Coloring(n), {}, 0};
  std::vector<bool> alive(n, true);
  int remaining = n;
  while (remaining > 0) {
    std::optional<Island> island = find_c_island(g, c, s_max, &alive);
    if (!island) {
      std::string residual;
      for (Vertex v = 0; v < n; ++v) {
        if (alive[v]) residual += (residual.empty() ? "" : " ") + std::to_string(v);
      }
      throw Error(ErrorCode::IslandSearchFailed,
                  "no " + std::to_string(c) + "-island of size <= " + std::to_string(s_max) + " in residual {" +
                      residual + "}");
    }
    for (Vertex v : island->members) alive[v] = false;
    remaining -= static_cast<int>(island->members.size());
    out.largest_island = std::max(out.largest_island, static_cast<int>(island->members.size()));
    out.islands.push_back(std::move(*island));
  }
  for (auto it = out.islands.rbegin(); it != out.islands.rend(); ++it) {
    for (Vertex v : it->members) {
      std::vector<Color> blocked;
      for (Vertex w : g.rotation(v)) {
        if (out.coloring.has(w) && !std::binary_search(it->members.begin(), it->members.end(), w)) {
          blocked.push_back(out.coloring[w]);
        }
      }
      for (Color a : lists[v]) {
        if (std::find(blocked.begin(), blocked.end(), a) == blocked.end()) {
          out.coloring.set(v, a);
          break;
        }
      }
    }
  }
  return out;
}

bool sparsity_check(const EmbeddedGraph& g, const Rational& a, const Rational& b) {
  return Rational(g.num_edges()) <= a * Rational(g.num_vertices()) + b;
}

}  // namespace wdc
