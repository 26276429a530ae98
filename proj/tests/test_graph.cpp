#include <random>

#include "doctest.h"
#include "kcover/error.hpp"
#include "kcover/graph.hpp"
#include "support/convert.hpp"

using namespace kcover;

namespace {

Graph bowtie() {
  const std::vector<Edge> e{{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}};
  return Graph::from_edges(5, e);
}

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc{};
}

}  // namespace

TEST_CASE("edges normalize and sort lexicographically") {
  Graph g(4);
  g.add_edge(3, 1);
  g.add_edge(2, 0);
  g.add_edge(1, 0);
  const auto es = g.edges();
  REQUIRE(es.size() == 3);
  CHECK(es[0] == Edge(0, 1));
  CHECK(es[1] == Edge(0, 2));
  CHECK(es[2] == Edge(1, 3));
  CHECK(g.has_edge(1, 3));
  CHECK(g.has_edge(3, 1));
  CHECK_FALSE(g.has_edge(2, 3));
  g.remove_edge(1, 3);
  CHECK(g.edge_count() == 2);
}

TEST_CASE("invalid vertices and sizes are rejected") {
  CHECK(code_of([] { Graph g(65); }) == Errc::unsupported_size);
  CHECK(code_of([] { Graph(3).add_edge(1, 1); }) == Errc::invalid_edge);
  CHECK(code_of([] { Graph(3).add_edge(0, 3); }) == Errc::invalid_edge);
  CHECK(code_of([] { Graph(3).add_edge(-1, 2); }) == Errc::invalid_edge);
  Graph g64(64);
  g64.add_edge(0, 63);
  CHECK(g64.degree(63) == 1);
}

TEST_CASE("from_rows validates symmetry") {
  const std::vector<VertexSet> bad{0b10, 0b00};
  CHECK(code_of([&] { Graph::from_rows(bad); }) == Errc::invalid_argument);
  const std::vector<VertexSet> loop{0b01};
  CHECK(code_of([&] { Graph::from_rows(loop); }) == Errc::invalid_argument);
  const std::vector<VertexSet> ok{0b10, 0b01};
  CHECK(Graph::from_rows(ok).edge_count() == 1);
}

TEST_CASE("connectivity and components") {
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(3, 4);
  CHECK_FALSE(is_connected(g));
  const auto cs = components(g);
  REQUIRE(cs.size() == 3);
  CHECK(cs[0] == 0b00011);
  CHECK(cs[1] == 0b00100);
  CHECK(cs[2] == 0b11000);
  CHECK(is_connected(Graph(1)));
  CHECK(is_connected(Graph(0)));
  CHECK(is_connected(bowtie()));
}

TEST_CASE("cliques through an edge") {
  const Graph k5 = complete_graph(5);
  const auto cl = cliques_containing_edge(k5, {0, 1}, 4);
  REQUIRE(cl.size() == 3);
  CHECK(cl[0] == std::vector<int>{0, 1, 2, 3});
  CHECK(cl[2] == std::vector<int>{0, 1, 3, 4});
  CHECK(count_cliques_containing_edge(k5, {0, 1}, 3, 100) == 3);
  CHECK(count_cliques_containing_edge(k5, {0, 1}, 3, 2) == 2);
  CHECK(triangle_vertices(bowtie(), {0, 1}) == 0b100);
  CHECK(code_of([] { triangle_vertices(bowtie(), {0, 3}); }) == Errc::invalid_edge);
  CHECK(k_cliques(bowtie(), 3) == std::vector<VertexSet>{0b00111, 0b11100});
}

TEST_CASE("clique counts match brute force on random graphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 4 + trial % 6;
    const naive::Mat m = naive::random_graph(rng, n, 0.6);
    const Graph g = support::to_graph(m);
    for (const auto& e : g.edges())
      for (int k = 3; k <= 5; ++k)
        CHECK(static_cast<int>(cliques_containing_edge(g, e, k).size()) == naive::cliques_on_edge(m, e.u, e.v, k));
  }
}

TEST_CASE("contraction relabels by shifting down") {
  const Graph g = bowtie();
  const auto [h, map] = contract_edge(g, {2, 3});
  CHECK(h.n() == 4);
  CHECK(map.merged_image == 2);
  CHECK(map.image == std::vector<int>{0, 1, 2, 2, 3});
  // 2-4 and 3-4 both become 2-3.
  CHECK(h.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {2, 3}});
  CHECK(support::to_graph(naive::contract(support::to_mat(g), 2, 3)) == h);
}

TEST_CASE("contraction matches the reference on random graphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 80; ++trial) {
    const naive::Mat m = naive::random_graph(rng, 3 + trial % 8, 0.5);
    const Graph g = support::to_graph(m);
    for (const auto& e : g.edges()) {
      const auto [h, map] = contract_edge(g, e);
      CHECK(h == support::to_graph(naive::contract(m, e.u, e.v)));
      CHECK(map.image[e.u] == map.image[e.v]);
    }
  }
}

TEST_CASE("permute and restrict") {
  const Graph g = bowtie();
  const std::vector<int> perm{4, 3, 2, 1, 0};
  const Graph p = permute(g, perm);
  CHECK(p.has_edge(4, 3));
  CHECK(p.has_edge(1, 0));
  CHECK(p.edge_count() == g.edge_count());
  const std::vector<int> bad{0, 0, 1, 2, 3};
  CHECK(code_of([&] { permute(g, bad); }) == Errc::invalid_argument);
  const auto [sub, back] = restrict_to(g, 0b11100);
  CHECK(sub.n() == 3);
  CHECK(sub.edge_count() == 3);
  CHECK(back == std::vector<int>{2, 3, 4});
}

TEST_CASE("named graphs") {
  CHECK(complete_graph(6).edge_count() == 15);
  const Graph oct = complete_multipartite_pairs(3);
  CHECK(oct.n() == 6);
  CHECK(oct.edge_count() == 12);
  CHECK_FALSE(oct.has_edge(0, 1));
}
