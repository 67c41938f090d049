#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "wdc/error.hpp"
#include "wdc/generators.hpp"
#include "wdc/metrics.hpp"
#include "wdc/random.hpp"
#include "wdc/stacks.hpp"

using namespace wdc;

namespace {

std::vector<Vertex> outer_of(const EmbeddedGraph& g) { return outer_cycle(g, trace_faces(g)); }

EmbeddedGraph without_edge(const EmbeddedGraph& g, Vertex a, Vertex b) {
  std::vector<std::vector<Vertex>> rot = g.rotations();
  rot[a].erase(std::find(rot[a].begin(), rot[a].end(), b));
  rot[b].erase(std::find(rot[b].begin(), rot[b].end(), a));
  return EmbeddedGraph(std::move(rot), g.outer_marker());
}

ListAssignment random_lists(Rng& rng, int n, int size, int universe) {
  ListAssignment lists(n);
  std::vector<Color> all(universe);
  for (int a = 0; a < universe; ++a) all[a] = a + 1;
  for (auto& l : lists) {
    rng.shuffle(all);
    l.assign(all.begin(), all.begin() + size);
    std::sort(l.begin(), l.end());
  }
  return lists;
}

Coloring random_psi(Rng& rng, int n, const std::vector<Vertex>& cycle, const ListAssignment& lists) {
  Coloring psi(n);
  for (Vertex x : cycle) psi.set(x, rng.pick(lists[x]));
  return psi;
}

bool extends(const Coloring& phi, const Coloring& psi, const std::vector<Vertex>& cycle) {
  return std::all_of(cycle.begin(), cycle.end(), [&](Vertex x) { return phi.get(x) == psi.get(x); });
}

int colours_on(const Coloring& phi, const std::vector<Vertex>& cycle) {
  std::set<Color> used;
  for (Vertex x : cycle) used.insert(phi[x]);
  return static_cast<int>(used.size());
}

}  // namespace

TEST_CASE("bare cycles are leaves") {
  for (int t : {3, 4}) {
    const EmbeddedGraph g = gen_cycle(t);
    const auto d = recognize_stack(g, outer_of(g), t);
    CHECK(d.is_leaf());
    CHECK(d.depth() == 0);
    CHECK(d.node_count() == 1);
  }
  CHECK_THROWS_AS(recognize_stack(gen_cycle(5), outer_of(gen_cycle(5)), 4), Error);
}

TEST_CASE("the two bases") {
  const EmbeddedGraph k4 = fixture::k4();
  const auto d3 = recognize_stack(k4, {0, 1, 2}, 3);
  REQUIRE(d3.apex);
  CHECK(*d3.apex == 3);
  CHECK(d3.children.size() == 3);
  for (const auto& child : d3.children) CHECK(child.is_leaf());

  const EmbeddedGraph k23 = fixture::k23();
  const auto d4 = recognize_stack(k23, {0, 1, 2, 3}, 4);
  REQUIRE(d4.apex);
  CHECK(*d4.apex == 4);
  CHECK(d4.children.size() == 2);
  CHECK(d4.depth() == 1);
  CHECK_THROWS_AS(recognize_stack(k23, {0, 1, 2, 3}, 3), Error);
}

TEST_CASE("generated stacks are recognised and mutations are not") {
  for (int t : {3, 4}) {
    for (int depth = 0; depth <= 4; ++depth) {
      for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        const EmbeddedGraph g = gen_random_stack(t, depth, seed);
        const auto outer = outer_of(g);
        StackDecomposition d;
        REQUIRE_NOTHROW(d = recognize_stack(g, outer, t));
        CHECK(d.depth() <= depth);
        std::vector<bool> on_outer(g.num_vertices(), false);
        for (Vertex x : outer) on_outer[x] = true;
        for (const auto& [a, b] : g.edges()) {
          if (on_outer[a] && on_outer[b]) continue;
          const EmbeddedGraph h = without_edge(g, a, b);
          try {
            recognize_stack(h, outer_of(h), t);
            FAIL("accepted after removing " << a << "-" << b);
          } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NotAStack);
          }
        }
      }
    }
  }
}

TEST_CASE("a vertex outside the cycle is rejected") {
  const EmbeddedGraph g = fixture::k23();
  try {
    recognize_stack(g, {0, 1, 2, 4}, 4);
    FAIL("inner cycle accepted as outer");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAStack);
  }
}

TEST_CASE("3-stack colouring on K4") {
  const EmbeddedGraph k4 = fixture::k4();
  const std::vector<Vertex> c{0, 1, 2};
  const ListAssignment lists = uniform_lists(4, 3);
  Coloring rainbow(4);
  rainbow.set(0, 1);
  rainbow.set(1, 2);
  rainbow.set(2, 3);
  const Coloring phi = color_3stack(k4, c, 0, lists, rainbow);
  CHECK(phi[3] == 1);
  const auto rep = compliance_checks(k4, c, phi, std::nullopt);
  CHECK(rep.singleton == std::vector<bool>{false, true, true});
  CHECK(component_in_closed_neighbourhoods(k4, c, phi, 0));

  Coloring two(4);
  two.set(0, 1);
  two.set(1, 1);
  two.set(2, 2);
  const Coloring phi2 = color_3stack(k4, c, 0, lists, two);
  CHECK(phi2[3] == 3);
  CHECK(compliance_checks(k4, c, phi2, std::nullopt).singleton == std::vector<bool>{true, true, true});

  Coloring bare(3);
  for (Vertex x = 0; x < 3; ++x) bare.set(x, x + 1);
  CHECK(color_3stack(gen_cycle(3), {0, 1, 2}, 1, uniform_lists(3, 3), bare) == bare);
}

TEST_CASE("3-stack colourings keep their guarantees") {
  Rng rng(3);
  for (int trial = 0; trial < 120; ++trial) {
    const EmbeddedGraph g = gen_random_stack(3, trial % 5, 1000 + trial);
    const auto c = outer_of(g);
    const ListAssignment lists = random_lists(rng, g.num_vertices(), 3, 5);
    const Coloring psi = random_psi(rng, g.num_vertices(), c, lists);
    const Vertex u = rng.pick(c);
    const Coloring phi = color_3stack(g, c, u, lists, psi);
    CHECK(extends(phi, psi, c));
    CHECK(verify_coloring(g, phi, &lists, VerifyMode::weak(2)).pass);
    const auto rep = compliance_checks(g, c, phi, std::nullopt);
    for (int i = 0; i < 3; ++i) {
      if (c[i] != u || colours_on(phi, c) <= 2) CHECK(rep.singleton[i]);
    }
    CHECK(component_in_closed_neighbourhoods(g, c, phi, u));
    CHECK(rep.psi_opaque);
  }
}

TEST_CASE("4-stack colouring on K23") {
  const EmbeddedGraph k23 = fixture::k23();
  const std::vector<Vertex> c{0, 1, 2, 3};
  ListAssignment lists(5, ColorList{1, 2});
  Coloring psi(5);
  psi.set(0, 1);
  psi.set(1, 2);
  psi.set(2, 2);
  psi.set(3, 1);
  // Active vertices are those adjacent to the centre.
  CHECK(is_active(k23, c, 0));
  CHECK_FALSE(is_active(k23, c, 1));
  const Coloring phi = color_4stack(k23, c, 0, lists, psi);
  CHECK(phi[4] == 1);  // avoids the colour of the vertex opposite 0
  const auto rep = compliance_checks(k23, c, phi, Vertex{0});
  CHECK(rep.psi_opaque);
  CHECK(rep.v_compliant);
  CHECK(rep.active);
  try {
    color_4stack(k23, c, 1, lists, psi);
    FAIL("inactive vertex accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotActive);
  }
}

TEST_CASE("4-stack colourings keep their guarantees") {
  Rng rng(4);
  for (int trial = 0; trial < 120; ++trial) {
    const EmbeddedGraph g = gen_random_stack(4, trial % 5, 2000 + trial);
    const auto c = outer_of(g);
    const ListAssignment lists = random_lists(rng, g.num_vertices(), 2, 4);
    const Coloring psi = random_psi(rng, g.num_vertices(), c, lists);
    std::vector<Vertex> active;
    for (Vertex x : c) {
      if (is_active(g, c, x)) active.push_back(x);
    }
    REQUIRE(active.size() >= 2);
    const Vertex v = rng.pick(active);
    const Coloring phi = color_4stack(g, c, v, lists, psi);
    CHECK(extends(phi, psi, c));
    CHECK(verify_coloring(g, phi, &lists, VerifyMode::weak(4)).pass);
    const auto rep = compliance_checks(g, c, phi, v);
    CHECK(rep.psi_opaque);
    CHECK(rep.v_compliant);
    CHECK(rep.active);
  }
}

TEST_CASE("compliance verdicts") {
  const EmbeddedGraph k23 = fixture::k23();
  const std::vector<Vertex> c{0, 1, 2, 3};
  auto colouring = [](std::vector<std::optional<Color>> xs) { return Coloring(std::move(xs)); };

  // Centre differs from both neighbours: nothing crosses the cycle.
  const auto none = compliance_checks(k23, c, colouring({1, 2, 1, 2, 2}), Vertex{0});
  CHECK(none.transversal == 0);
  CHECK(none.v_compliant);
  CHECK(none.psi_opaque);

  // The centre joins 0 and 2, which are different runs on the cycle.
  const auto joined = compliance_checks(k23, c, colouring({1, 2, 1, 2, 1}), Vertex{0});
  CHECK(joined.transversal == 1);
  CHECK_FALSE(joined.psi_opaque);
  CHECK_FALSE(joined.v_differs_from_opposite);
  CHECK_FALSE(joined.v_compliant);

  // Centre shares 0's colour only.
  const auto one = compliance_checks(k23, c, colouring({1, 2, 2, 2, 1}), Vertex{0});
  CHECK(one.transversal == 1);
  CHECK(one.contains_v);
  CHECK(one.v_differs_from_opposite);
  CHECK(one.off_cycle_members_see_uncovered_cycle);
  CHECK(one.v_compliant);
  const auto wrong_v = compliance_checks(k23, c, colouring({1, 2, 2, 2, 1}), Vertex{2});
  CHECK_FALSE(wrong_v.contains_v);
  CHECK_FALSE(wrong_v.v_compliant);

  // Two centres over the pair 0, 2, each joined to a different end.
  const std::vector<std::pair<double, double>> pts{{0, 0}, {2, -3}, {4, 0}, {2, 3}, {2, -1}, {2, 1}};
  const std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 2}, {0, 5}, {5, 2}};
  const EmbeddedGraph twin = straight_line_embedding(pts, edges);
  const auto two = compliance_checks(twin, c, colouring({1, 3, 2, 3, 1, 2}), Vertex{0});
  CHECK(two.transversal == 2);
  CHECK(two.psi_opaque);
  CHECK_FALSE(two.v_compliant);
  CHECK(compliance_checks(k23, c, colouring({1, 2, 1, 2, 2}), std::nullopt).singleton ==
        std::vector<bool>{true, true, true, true});
  CHECK(compliance_checks(k23, c, colouring({1, 2, 2, 2, 1}), std::nullopt).singleton ==
        std::vector<bool>{false, true, true, true});
}
