#include "wdc/sparsifiers.hpp"

#include <algorithm>
#include <array>

#include "wdc/error.hpp"

namespace wdc {

namespace {

int multiplicity(const Multiset& b, Color a) { return static_cast<int>(std::count(b.begin(), b.end(), a)); }

// Multiplicity in b of each list color, plus distinct colors and the largest
// doubled color of b.  Both inputs are sorted.
struct Profile {
  std::array<int, 3> in_list{};
  int distinct = 0;
  Color doubled = -1;
};

Profile profile(const ColorList& list, const Multiset& b) {
  Profile p;
  const std::size_t n = b.size();
  std::size_t j = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Color a = b[i];
    if (i == 0 || a != b[i - 1]) ++p.distinct;
    else p.doubled = a;
    while (j < list.size() && list[j] < a) ++j;
    if (j < list.size() && list[j] == a) ++p.in_list[j];
  }
  return p;
}

Sparsifier make(SparsifierId id, int c, int size, std::vector<std::pair<int, int>> edges, std::vector<int> gamma) {
  Sparsifier s{id, c, size, std::move(edges), std::move(gamma)};
  for (const auto& [a, b] : s.edges) {
    s.adjacency[a][b] = s.adjacency[b][a] = true;
    ++s.degrees[a];
    ++s.degrees[b];
  }
  return s;
}

const std::array<Sparsifier, 4>& catalog() {
  static const std::array<Sparsifier, 4> all{{
      make(SparsifierId::S1_c2, 2, 1, {}, {3}),
      make(SparsifierId::S2_c2, 2, 4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {4, 4, 4, 4}),
      make(SparsifierId::S1_c3, 3, 1, {}, {5}),
      make(SparsifierId::S2_c3, 3, 4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}, {6, 6, 6, 6}),
  }};
  return all;
}

using Adjacency = std::array<std::array<bool, 4>, 4>;

struct SmallList {
  std::array<Color, 3> colors{};
  int size = 0;
  void push(Color a) { colors[size++] = a; }
};

// Lexicographically first assignment over `order` with colors from `lists`
// such that every pair marked in `differ` gets distinct colors.
bool first_coloring(const int* order, int count, const std::array<SmallList, 4>& lists, const Adjacency& differ,
                    std::vector<Color>& phi) {
  std::array<int, 4> choice{};
  int k = 0;
  choice[0] = -1;
  while (k >= 0) {
    if (k == count) return true;
    const int v = order[k];
    bool placed = false;
    while (++choice[k] < lists[v].size) {
      const Color a = lists[v].colors[choice[k]];
      bool ok = true;
      for (int j = 0; j < k; ++j) {
        if (differ[v][order[j]] && phi[order[j]] == a) ok = false;
      }
      if (ok) {
        phi[v] = a;
        placed = true;
        break;
      }
    }
    if (placed) {
      if (++k < 4) choice[k] = -1;
    } else {
      --k;
    }
  }
  return false;
}

}  // namespace

std::string_view to_string(SparsifierId id) {
  switch (id) {
    case SparsifierId::S1_c2: return "S1_c2";
    case SparsifierId::S2_c2: return "S2_c2";
    case SparsifierId::S1_c3: return "S1_c3";
    case SparsifierId::S2_c3: return "S2_c3";
  }
  return "?";
}

const Sparsifier& sparsifier(SparsifierId id) { return catalog()[static_cast<int>(id)]; }

std::vector<SparsifierId> sparsifiers_for(int c) {
  if (c == 2) return {SparsifierId::S1_c2, SparsifierId::S2_c2};
  if (c == 3) return {SparsifierId::S1_c3, SparsifierId::S2_c3};
  throw Error(ErrorCode::InvalidInput, "sparsifiers exist for c = 2 and c = 3");
}

std::vector<Color> color_sparsifier(SparsifierId id, const ListAssignment& lists, const MultiAssignment& b) {
  std::vector<Color> phi;
  color_sparsifier_into(id, lists, b, phi);
  return phi;
}

void color_sparsifier_into(SparsifierId id, const ListAssignment& lists, const MultiAssignment& b,
                           std::vector<Color>& phi) {
  const Sparsifier& s = sparsifier(id);
  if (static_cast<int>(lists.size()) != s.size || static_cast<int>(b.size()) != s.size) {
    throw Error(ErrorCode::PreconditionViolated, "input size does not match the pattern");
  }
  for (int v = 0; v < s.size; ++v) {
    const ColorList& l = lists[v];
    bool strictly_increasing = static_cast<int>(l.size()) == s.c;
    for (std::size_t j = 1; strictly_increasing && j < l.size(); ++j) strictly_increasing = l[j - 1] < l[j];
    if (!strictly_increasing) {
      throw Error(ErrorCode::PreconditionViolated, "lists must hold " + std::to_string(s.c) + " distinct sorted colors");
    }
    if (static_cast<int>(b[v].size()) > s.gamma[v] - s.degree(v)) {
      throw Error(ErrorCode::PreconditionViolated, "multiset at pattern vertex " + std::to_string(v) + " too large");
    }
  }
  phi.assign(s.size, 0);
  const Adjacency& adj = s.adjacency;

  switch (id) {
    case SparsifierId::S1_c2:
    case SparsifierId::S1_c3: {
      for (Color a : lists[0]) {
        if (multiplicity(b[0], a) < 2) {
          phi[0] = a;
          return;
        }
      }
      break;
    }
    case SparsifierId::S2_c2: {
      std::array<SmallList, 4> trimmed;
      Adjacency differ = adj;
      for (int v = 0; v < 4; ++v) {
        const Profile p = profile(lists[v], b[v]);
        for (Color a : lists[v]) {
          if (a != p.doubled) trimmed[v].push(a);
        }
        if (p.doubled >= 0) {
          const int next = (v + 1) % 4;
          differ[v][next] = differ[next][v] = false;
        }
      }
      static constexpr int order[4] = {0, 1, 2, 3};
      if (first_coloring(order, 4, trimmed, differ, phi)) return;
      break;
    }
    case SparsifierId::S2_c3: {
      std::array<bool, 4> in_r{};
      std::array<SmallList, 4> trimmed;
      int order[4];
      int count = 0;
      for (int v = 0; v < 4; ++v) {
        const Profile p = profile(lists[v], b[v]);
        if (p.distinct <= 2) {
          in_r[v] = true;
          for (int j = 0; j < 3; ++j) {
            if (p.in_list[j] == 0) {
              phi[v] = lists[v][j];
              break;
            }
          }
        } else {
          order[count++] = v;
          for (int j = 0; j < 3; ++j) {
            if (p.in_list[j] <= 1) trimmed[v].push(lists[v][j]);
          }
        }
      }
      Adjacency differ = adj;
      if (!in_r[1] && !in_r[3] && (in_r[0] || in_r[2])) differ[1][3] = differ[3][1] = true;
      if (first_coloring(order, count, trimmed, differ, phi)) return;
      break;
    }
  }
  throw Error(ErrorCode::CounterexampleFound, std::string("no coloring found for ") + std::string(to_string(id)));
}

bool is_B_opaque(const Sparsifier& s, const std::vector<Color>& phi, const MultiAssignment& b) {
  std::array<int, 4> root{0, 1, 2, 3};
  auto find = [&](int x) {
    while (root[x] != x) x = root[x];
    return x;
  };
  for (const auto& [x, y] : s.edges) {
    if (phi[x] == phi[y]) root[find(x)] = find(y);
  }
  std::array<int, 4> carriers{};
  for (int v = 0; v < s.size; ++v) {
    const int m = multiplicity(b[v], phi[v]);
    if (m > 1) return false;
    if (m == 1 && ++carriers[find(v)] > 1) return false;
  }
  return true;
}

bool all_faces_short_cycles(const EmbeddedGraph& g, const FaceStructure& fs, Vertex v, int t) {
  if (g.degree(v) == 0) return false;
  for (int f : fs.faces_at(g, v)) {
    const Face& face = fs.face(f);
    if (!face.is_cycle || face.length != t) return false;
  }
  return true;
}

std::vector<Appearance> find_appearances(const EmbeddedGraph& g, const FaceStructure& fs, int c) {
  const int t = c == 2 ? 4 : 3;
  const auto ids = sparsifiers_for(c);
  const Sparsifier& s1 = sparsifier(ids[0]);
  const Sparsifier& s2 = sparsifier(ids[1]);
  const int n = g.num_vertices();
  std::vector<bool> clean(n);
  for (Vertex v = 0; v < n; ++v) clean[v] = all_faces_short_cycles(g, fs, v, t);

  std::vector<Appearance> out;
  for (Vertex v = 0; v < n; ++v) {
    if (clean[v] && g.degree(v) <= s1.gamma[0]) out.push_back({s1.id, {v}});
  }
  const int cap = s2.gamma[0];
  auto ok = [&](Vertex v) { return clean[v] && g.degree(v) <= cap; };
  std::vector<Appearance> second;
  if (c == 2) {
    for (Vertex a = 0; a < n; ++a) {
      if (!ok(a)) continue;
      for (Vertex b : g.rotation(a)) {
        if (b <= a || !ok(b)) continue;
        for (Vertex d : g.rotation(a)) {
          if (d <= b || !ok(d) || g.adjacent(b, d)) continue;
          for (Vertex x : g.rotation(b)) {
            if (x <= a || !ok(x) || !g.adjacent(x, d) || g.adjacent(x, a)) continue;
            second.push_back({s2.id, {a, b, x, d}});
          }
        }
      }
    }
  } else {
    for (Vertex x = 0; x < n; ++x) {
      if (!ok(x)) continue;
      for (Vertex y : g.rotation(x)) {
        if (y <= x || !ok(y)) continue;
        for (Vertex p : g.rotation(x)) {
          if (p == y || !ok(p) || !g.adjacent(p, y)) continue;
          for (Vertex q : g.rotation(x)) {
            if (q <= p || q == y || !ok(q) || !g.adjacent(q, y) || g.adjacent(p, q)) continue;
            second.push_back({s2.id, {x, p, y, q}});
          }
        }
      }
    }
  }
  std::sort(second.begin(), second.end(), [](const Appearance& l, const Appearance& r) { return l.image < r.image; });
  out.insert(out.end(), second.begin(), second.end());
  return out;
}

std::vector<Appearance> find_appearances(const EmbeddedGraph& g, int c) {
  return find_appearances(g, trace_faces(g), c);
}

bool is_appearance(const EmbeddedGraph& g, const FaceStructure& fs, const Appearance& a) {
  const Sparsifier& s = sparsifier(a.id);
  const int t = s.c == 2 ? 4 : 3;
  if (static_cast<int>(a.image.size()) != s.size) return false;
  for (int i = 0; i < s.size; ++i) {
    const Vertex v = a.image[i];
    if (v < 0 || v >= g.num_vertices()) return false;
    if (g.degree(v) > s.gamma[i]) return false;
    if (!all_faces_short_cycles(g, fs, v, t)) return false;
    for (int j = i + 1; j < s.size; ++j) {
      if (a.image[j] == v) return false;
      if (s.adjacent(i, j) != g.adjacent(v, a.image[j])) return false;
    }
  }
  return true;
}

bool independent(const EmbeddedGraph& g, const Appearance& a, const Appearance& b) {
  for (Vertex x : a.image) {
    for (Vertex y : b.image) {
      if (x == y || g.adjacent(x, y)) return false;
    }
  }
  return true;
}

std::vector<Appearance> greedy_maximal_system(const EmbeddedGraph& g, const FaceStructure& fs, int c) {
  std::vector<bool> blocked(g.num_vertices(), false);
  std::vector<Appearance> chosen;
  for (const Appearance& a : find_appearances(g, fs, c)) {
    if (std::any_of(a.image.begin(), a.image.end(), [&](Vertex v) { return blocked[v]; })) continue;
    chosen.push_back(a);
    for (Vertex v : a.image) {
      blocked[v] = true;
      for (Vertex w : g.rotation(v)) blocked[w] = true;
    }
  }
  return chosen;
}

std::vector<Appearance> greedy_maximal_system(const EmbeddedGraph& g, int c) {
  return greedy_maximal_system(g, trace_faces(g), c);
}

Coloring extend_over_appearances(const EmbeddedGraph& g, const std::vector<Appearance>& system, const Coloring& phi,
                                 const ListAssignment& lists) {
  Coloring out = phi;
  std::vector<bool> in_image(g.num_vertices(), false);
  for (const Appearance& a : system) {
    for (Vertex v : a.image) in_image[v] = true;
  }
  for (const Appearance& a : system) {
    const Sparsifier& s = sparsifier(a.id);
    ListAssignment local(s.size);
    MultiAssignment b(s.size);
    for (int i = 0; i < s.size; ++i) {
      const Vertex v = a.image[i];
      ColorList l = lists[v];
      std::sort(l.begin(), l.end());
      l.erase(std::unique(l.begin(), l.end()), l.end());
      if (static_cast<int>(l.size()) > s.c) l.resize(s.c);
      local[i] = std::move(l);
      for (Vertex w : g.rotation(v)) {
        if (in_image[w]) continue;
        if (!phi.has(w)) throw Error(ErrorCode::UncoloredVertex, "neighbour " + std::to_string(w) + " uncolored");
        b[i].push_back(phi[w]);
      }
      std::sort(b[i].begin(), b[i].end());
    }
    const std::vector<Color> psi = color_sparsifier(a.id, local, b);
    for (int i = 0; i < s.size; ++i) out.set(a.image[i], psi[i]);
  }
  return out;
}

}  // namespace wdc
