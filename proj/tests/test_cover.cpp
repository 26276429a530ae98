#include <random>

#include "doctest.h"
#include "kcover/cover.hpp"
#include "kcover/error.hpp"
#include "support/convert.hpp"

using namespace kcover;

TEST_CASE("K4 covers") {
  const Graph k4 = complete_graph(4);
  CHECK(cover::holds(k4, {3, 2}));
  CHECK_FALSE(cover::holds(k4, {3, 3}));
  CHECK(cover::holds(k4, {4, 1}));
  const auto rep = cover::has_cover(k4, {4, 2});
  CHECK_FALSE(rep.holds);
  CHECK(rep.defects.size() == 6);
  CHECK(rep.defects[0].count == 1);
}

TEST_CASE("edgeless graphs hold vacuously") {
  CHECK(cover::holds(Graph(5), {3, 4}));
  CHECK(cover::has_cover(Graph(0), {4, 1}).holds);
}

TEST_CASE("cover spec validation") {
  for (auto spec : {cover::CoverSpec{2, 1}, cover::CoverSpec{3, 0}}) {
    try {
      cover::holds(Graph(3), spec);
      FAIL("expected invalid_argument");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::invalid_argument);
    }
  }
}

TEST_CASE("full counts report every edge") {
  const Graph k5 = complete_graph(5);
  const auto rep = cover::has_cover(k5, {3, 1}, true);
  REQUIRE(rep.counts.size() == 10);
  for (const auto& c : rep.counts) CHECK(c.count == 3);
}

TEST_CASE("cover agrees with brute force") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const naive::Mat m = naive::random_graph(rng, 4 + trial % 6, 0.7);
    const Graph g = support::to_graph(m);
    for (int k = 3; k <= 5; ++k)
      for (int l = 1; l <= 3; ++l) CHECK(cover::holds(g, {k, l}) == naive::cover(m, k, l));
  }
}

TEST_CASE("truss survivor agrees with naive peeling") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const naive::Mat m = naive::random_graph(rng, 5 + trial % 10, 0.55);
    const Graph g = support::to_graph(m);
    for (int l = 1; l <= 3; ++l) {
      const Graph expected = support::to_graph(naive::truss(m, l));
      CHECK(cover::truss_survivor(g, l) == expected);
      CHECK(cover::truss_survivor(g, l, {static_cast<std::uint64_t>(trial)}) == expected);
    }
  }
}

TEST_CASE("truss components are (3,l)-covered and map back") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = support::to_graph(naive::random_graph(rng, 8 + trial % 8, 0.5));
    for (int l = 1; l <= 2; ++l) {
      std::size_t total = 0;
      for (const auto& t : cover::truss_decompose(g, l)) {
        CHECK(is_connected(t.graph));
        CHECK(cover::holds(t.graph, {3, l}));
        CHECK(t.graph.n() >= 3);
        for (const auto& e : t.graph.edges()) CHECK(g.has_edge(t.vertex_map[e.u], t.vertex_map[e.v]));
        total += t.graph.edge_count();
      }
      CHECK(total == cover::truss_survivor(g, l).edge_count());
    }
  }
}

TEST_CASE("truss of two triangles joined by a bridge") {
  Graph g(6);
  for (auto [u, v] : std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}})
    g.add_edge(u, v);
  const auto ts = cover::truss_decompose(g, 1);
  REQUIRE(ts.size() == 2);
  CHECK(ts[0].vertex_map == std::vector<int>{0, 1, 2});
  CHECK(ts[1].vertex_map == std::vector<int>{3, 4, 5});
}

TEST_CASE("implied truss cover") {
  CHECK(cover::implied_truss_cover(complete_graph(6), 5));
  try {
    cover::implied_truss_cover(Graph::from_edges(3, std::vector<Edge>{{0, 1}}), 3);
    FAIL("expected precondition_failed");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::precondition_failed);
  }
}
