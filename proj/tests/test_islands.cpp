#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "wdc/error.hpp"
#include "wdc/generators.hpp"
#include "wdc/islands.hpp"
#include "wdc/metrics.hpp"

using namespace wdc;

namespace {

// Size of the smallest c-island by subset enumeration; 0 if none.
int smallest_island_by_subsets(const EmbeddedGraph& g, int c) {
  const int n = g.num_vertices();
  int best = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (best && size >= best) continue;
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      if (!(mask >> v & 1)) continue;
      int outside = 0;
      for (Vertex w : g.rotation(v)) outside += !(mask >> w & 1);
      ok = outside < c;
    }
    if (ok) best = size;
  }
  return best;
}

}  // namespace

TEST_CASE("island examples") {
  const auto leaf = find_c_island(fixture::path(4), 2, 20);
  REQUIRE(leaf);
  CHECK(leaf->members == std::vector<Vertex>{0});
  CHECK(leaf->boundary_degrees == std::vector<int>{1});

  const auto pair = find_c_island(gen_cycle(4), 2, 20);
  REQUIRE(pair);
  CHECK(pair->members == std::vector<Vertex>{0, 1});
  CHECK(pair->boundary_degrees == std::vector<int>{1, 1});

  const EmbeddedGraph k4 = fixture::k4();
  CHECK_FALSE(find_c_island(k4, 2, 2));
  const auto three = find_c_island(k4, 2, 4);
  REQUIRE(three);
  CHECK(three->members.size() == 3);
  const auto whole = find_c_island(k4, 1, 4);
  REQUIRE(whole);
  CHECK(whole->members == std::vector<Vertex>{0, 1, 2, 3});
  CHECK_FALSE(find_c_island(k4, 1, 3));
  CHECK(find_c_island(k4, 4, 1)->members.size() == 1);
}

TEST_CASE("island search finds the smallest island") {
  std::vector<EmbeddedGraph> graphs{fixture::k4(), fixture::k23(), gen_cube(), gen_cycle(6), gen_triangulated_grid(3)};
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    graphs.push_back(gen_random_planar(10, 2, seed));
    graphs.push_back(gen_random_planar(10, 3, seed));
  }
  for (const EmbeddedGraph& g : graphs) {
    for (int c = 1; c <= 4; ++c) {
      const int expect = smallest_island_by_subsets(g, c);
      const auto found = find_c_island(g, c, g.num_vertices());
      if (expect == 0) {
        CHECK_FALSE(found);
        continue;
      }
      REQUIRE(found);
      CHECK(static_cast<int>(found->members.size()) == expect);
      CHECK(is_c_island(g, c, found->members));
      for (std::size_t j = 0; j < found->members.size(); ++j) CHECK(found->boundary_degrees[j] < c);
    }
  }
}

TEST_CASE("island search respects the alive mask") {
  const EmbeddedGraph g = gen_cycle(6);
  std::vector<bool> alive(6, true);
  alive[0] = false;
  const auto island = find_c_island(g, 2, 6, &alive);
  REQUIRE(island);
  CHECK(island->members == std::vector<Vertex>{1});
  CHECK(is_c_island(g, 2, {1}, &alive));
  CHECK_FALSE(is_c_island(g, 2, {1}));
  CHECK_FALSE(is_c_island(g, 2, {}));
}

TEST_CASE("island colorings") {
  const auto flat = island_coloring(fixture::edgeless(5), uniform_lists(5, 2), 2);
  CHECK(flat.coloring.complete());
  CHECK(flat.largest_island == 1);
  CHECK(verify_coloring(fixture::edgeless(5), flat.coloring, nullptr, VerifyMode::clustering(1)).pass);

  const EmbeddedGraph c4 = gen_cycle(4);
  const ListAssignment lists = uniform_lists(4, 2);
  const auto res = island_coloring(c4, lists, 2);
  CHECK(verify_coloring(c4, res.coloring, &lists, VerifyMode::clustering(2)).pass);

  CHECK_THROWS_AS(island_coloring(c4, uniform_lists(4, 1), 2), Error);
  try {
    island_coloring(fixture::k4(), uniform_lists(4, 3), 2, 2);
    FAIL("expected a failed search");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IslandSearchFailed);
  }
}

TEST_CASE("island colorings keep components inside islands") {
  for (int c : {2, 3}) {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
      const EmbeddedGraph g = gen_random_planar(200, c, seed);
      ListAssignment lists(g.num_vertices());
      for (Vertex v = 0; v < g.num_vertices(); ++v) {
        for (int j = 0; j < c; ++j) lists[v].push_back(1 + (v * 7 + j * 3 + static_cast<int>(seed)) % 6);
        std::sort(lists[v].begin(), lists[v].end());
        lists[v].erase(std::unique(lists[v].begin(), lists[v].end()), lists[v].end());
        for (Color a = 1; static_cast<int>(lists[v].size()) < c; ++a) {
          if (!list_contains(lists[v], a)) lists[v].insert(std::lower_bound(lists[v].begin(), lists[v].end(), a), a);
        }
      }
      const auto res = island_coloring(g, lists, c);
      std::vector<int> owner(g.num_vertices(), -1);
      for (std::size_t j = 0; j < res.islands.size(); ++j) {
        for (Vertex v : res.islands[j].members) owner[v] = static_cast<int>(j);
      }
      for (const auto& [a, b] : g.edges()) {
        if (owner[a] != owner[b]) CHECK(res.coloring[a] != res.coloring[b]);
      }
      const auto report = verify_coloring(g, res.coloring, &lists, VerifyMode::clustering(res.largest_island));
      CHECK(report.pass);
      CHECK(res.largest_island <= kDefaultIslandSize);
    }
  }
}

TEST_CASE("sparsity") {
  CHECK(sparsity_check(gen_cycle(4), Rational(2) - Rational(1, 3000), Rational(30)));
  CHECK_FALSE(sparsity_check(fixture::k4(), Rational(1), Rational(0)));
  CHECK(sparsity_check(fixture::edgeless(0), Rational(0), Rational(0)));
  CHECK(sparsity_check(fixture::k4(), Rational(3, 2), Rational(0)));
  CHECK_FALSE(sparsity_check(fixture::k4(), Rational(3, 2), Rational(-1, 1000)));
}
