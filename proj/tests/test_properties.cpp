// Invariants checked over enumerated and random graphs.
#include <numeric>
#include <random>

#include "doctest.h"
#include "kcover/canon.hpp"
#include "kcover/cover.hpp"
#include "kcover/extremal.hpp"
#include "kcover/hypertree.hpp"
#include "kcover/io.hpp"
#include "kcover/oracle.hpp"
#include "kcover/reduce.hpp"
#include "kcover/shrink.hpp"
#include "support/convert.hpp"

using namespace kcover;

TEST_CASE("triangle vertices equal 3-cliques through the edge") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = support::to_graph(naive::random_graph(rng, 3 + trial % 12, 0.5));
    for (const auto& e : g.edges())
      CHECK(bits::count(triangle_vertices(g, e)) == static_cast<int>(cliques_containing_edge(g, e, 3).size()));
  }
}

TEST_CASE("contraction edge count identity") {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = support::to_graph(naive::random_graph(rng, 2 + trial % 15, 0.45));
    for (const auto& e : g.edges()) {
      const auto [h, map] = contract_edge(g, e);
      CHECK(h.n() == g.n() - 1);
      CHECK(h.edge_count() == g.edge_count() - 1 - static_cast<std::size_t>(bits::count(triangle_vertices(g, e))));
    }
  }
}

TEST_CASE("canonical form under every permutation, n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    const int pairs = n * (n - 1) / 2;
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
      const Graph g = support::to_graph(naive::from_code(n, code));
      const std::string form = canonical_form(g);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        if (canonical_form(permute(g, perm)) != form) {
          FAIL("form changed for n=" << n << " code=" << code);
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
}

TEST_CASE("canonical form under every permutation, n = 6; sampled n = 7, 8") {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = support::to_graph(naive::random_graph(rng, 6, 0.5));
    const std::string form = canonical_form(g);
    std::vector<int> perm{0, 1, 2, 3, 4, 5};
    do {
      CHECK(canonical_form(permute(g, perm)) == form);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  for (int n = 7; n <= 8; ++n)
    for (int trial = 0; trial < 100; ++trial) {
      const Graph g = support::to_graph(naive::random_graph(rng, n, 0.5));
      std::vector<int> perm(static_cast<std::size_t>(n));
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(canonical_form(permute(g, perm)) == canonical_form(g));
    }
}

TEST_CASE("cocktail party degrees and common neighbourhoods") {
  for (int m = 1; m <= 12; ++m) {
    const Graph g = complete_multipartite_pairs(m);
    for (int v = 0; v < g.n(); ++v) CHECK(g.degree(v) == 2 * m - 2);
    for (const auto& e : g.edges()) CHECK(bits::count(triangle_vertices(g, e)) == 2 * m - 4);
  }
}

TEST_CASE("cover is monotone in l") {
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = support::to_graph(naive::random_graph(rng, 5 + trial % 8, 0.75));
    for (int k = 3; k <= 5; ++k)
      for (int l = 2; l <= 6; ++l)
        if (cover::holds(g, {k, l})) CHECK(cover::holds(g, {k, l - 1}));
  }
}

TEST_CASE("(k,1)-cover implies (3,k-2)-cover on random graphs") {
  std::mt19937_64 rng(113);
  int seen = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const Graph g = support::to_graph(naive::random_graph(rng, 5 + trial % 12, 0.85));
    for (int k = 3; k <= 6; ++k)
      if (cover::holds(g, {k, 1})) {
        ++seen;
        CHECK(cover::implied_truss_cover(g, k));
      }
  }
  CHECK(seen > 100);
}

TEST_CASE("truss soundness and maximality against subset search") {
  std::mt19937_64 rng(127);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 4 + trial % 4;
    const naive::Mat m = naive::random_graph(rng, n, 0.6);
    const auto edges = m.edges();
    if (edges.size() > 14) continue;
    for (int l = 1; l <= 2; ++l) {
      // Union of every edge subset in which each edge has l triangles.
      naive::Mat best(n);
      for (std::uint32_t mask = 1; mask < (1U << edges.size()); ++mask) {
        naive::Mat s(n);
        for (std::size_t i = 0; i < edges.size(); ++i)
          if ((mask >> i) & 1U) s.add(edges[i].first, edges[i].second);
        if (naive::cover(s, 3, l))
          for (auto [u, v] : s.edges()) best.add(u, v);
      }
      const Graph survivor = cover::truss_survivor(support::to_graph(m), l);
      CHECK(survivor == support::to_graph(best));
      CHECK(cover::holds(survivor, {3, l}));
    }
  }
}

TEST_CASE("truss is independent of peeling order") {
  std::mt19937_64 rng(131);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = support::to_graph(naive::random_graph(rng, 10 + trial % 20, 0.35));
    for (int l = 1; l <= 3; ++l) {
      const Graph fifo = cover::truss_survivor(g, l);
      for (std::uint64_t seed = 0; seed < 5; ++seed) CHECK(cover::truss_survivor(g, l, {seed}) == fifo);
    }
  }
}

TEST_CASE("edge minimum for k = 3 is ceil(3(n-1)/2)") {
  for (long long n = 4; n <= 200; ++n) CHECK(extremal::min_edges_kcover(n, 3) == (3 * (n - 1) + 1) / 2);
}

TEST_CASE("random hypertree specs build graphs of the advertised size") {
  std::mt19937_64 rng(137);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 3 + trial % 4;
    extremal::HypertreeSpec spec;
    const int blocks = 1 + static_cast<int>(rng() % 5);
    int expected_n = 0;
    long long expected_m = 0;
    for (int b = 0; b < blocks; ++b) {
      extremal::Block block;
      block.shape = rng() % 3 == 0 ? extremal::BlockTemplate::lblock(k, 1 + static_cast<int>(rng() % (k - 1)))
                                   : extremal::BlockTemplate::clique(k);
      if (b > 0) {
        const std::size_t parent = rng() % static_cast<std::size_t>(b);
        const int pv = static_cast<int>(rng() % static_cast<std::uint64_t>(spec.blocks[parent].shape.vertex_count()));
        const int sv = static_cast<int>(rng() % static_cast<std::uint64_t>(block.shape.vertex_count()));
        block.attach = extremal::Attachment{parent, {extremal::Glue{pv, sv}}};
      }
      expected_n += block.shape.vertex_count() - (b > 0 ? 1 : 0);
      expected_m += block.shape.edge_count();
      spec.blocks.push_back(block);
    }
    CHECK(spec.vertex_count() == expected_n);
    CHECK(spec.edge_count() == expected_m);
    CHECK(extremal::HypertreeSpec::parse(spec.to_text()) == spec);
    const Graph g = build_gtree(spec);
    CHECK(g.n() == expected_n);
    CHECK(static_cast<long long>(g.edge_count()) == expected_m);
    CHECK(is_connected(g));
    CHECK(cover::holds(g, {k, 1}));
    CHECK(static_cast<long long>(g.edge_count()) >= extremal::min_edges_kcover(g.n(), k));
  }
}

TEST_CASE("procedure bounds over every small (k,1)-covered connected graph") {
  for (int k = 3; k <= 4; ++k)
    for (int n = k; n <= 8; ++n)
      for (const Graph& g : oracle::enumerate_connected(n)) {
        if (!cover::holds(g, {k, 1})) continue;
        for (auto policy : {shrink::Policy::lex, shrink::Policy::max_overlap}) {
          const auto t = shrink::run_procedure(g, k, policy);
          CHECK(t.bound >= extremal::min_edges_kcover(n, k));
          CHECK(t.bound <= static_cast<long long>(g.edge_count()));
          CHECK(t.iterations() <= n - 1);
          if (n > k) CHECK(t.iterations() >= extremal::decompose(n, k).q + 1);
          const auto check = shrink::verify_trace(g, t);
          if (!check.ok) FAIL(canonical_form(g) << ": " << check.reason);
        }
      }
}

TEST_CASE("equality chain on constructions") {
  for (int k = 3; k <= 6; ++k)
    for (int n = k + 1; n <= 40; ++n) {
      const Graph g = extremal::build_extremal(n, k, extremal::Shape::path);
      const auto t = shrink::run_procedure(g, k);
      CHECK(t.bound == static_cast<long long>(g.edge_count()));
      CHECK(t.bound == extremal::min_edges_kcover(n, k));
    }
}

TEST_CASE("reduction makes monotone progress on small (3,2)-covered graphs") {
  for (int n = 5; n <= 8; ++n)
    for (const Graph& g : oracle::enumerate_connected(n)) {
      if (!cover::holds(g, {3, 2})) continue;
      const auto red = reduce::reduce_to_k4_covered(g);
      int prev_n = g.n();
      long long prev_m = static_cast<long long>(g.edge_count());
      for (const auto& s : red.steps) {
        CHECK(s.n_out == prev_n - 1);
        CHECK(s.m_out <= prev_m - 3);
        prev_n = s.n_out;
        prev_m = s.m_out;
      }
      CHECK(cover::holds(red.final_graph, {3, 2}));
    }
}

TEST_CASE("(3,2) minimizers have every edge in a K4") {
  for (int n = 5; n <= 7; ++n) {
    oracle::SearchSpec s;
    s.n = n;
    s.k = 3;
    s.l = 2;
    const auto rep = oracle::min_edges_bruteforce(s);
    REQUIRE(rep.minimum);
    for (const auto& m : rep.minimizers) {
      CHECK_FALSE(reduce::find_edge_not_in_k4(m.graph).has_value());
      CHECK(static_cast<long long>(m.graph.edge_count()) == *rep.minimum);
    }
  }
}

TEST_CASE("graph6 round trip on enumerated graphs") {
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : oracle::enumerate_connected(n)) CHECK(decode_graph6(encode_graph6(g)) == g);
}
