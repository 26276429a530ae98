#include <random>

#include "doctest.h"
#include "kcover/cover.hpp"
#include "kcover/error.hpp"
#include "kcover/extremal.hpp"
#include "kcover/hypertree.hpp"
#include "kcover/io.hpp"
#include "kcover/shrink.hpp"

using namespace kcover;
using shrink::Policy;

namespace {

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc{};
}

}  // namespace

TEST_CASE("bowtie trace") {
  const Graph g = parse_edge_list("0 1\n0 2\n1 2\n2 3\n2 4\n3 4\n");
  const auto t = shrink::run_procedure(g, 3);
  CHECK(t.initial == std::vector<int>{0, 1, 2});
  REQUIRE(t.iterations() == 1);
  CHECK(t.steps[0].frontier == 3);
  CHECK(t.steps[0].covered == 2);
  CHECK(t.steps[0].clique == std::vector<int>{2, 3, 4});
  CHECK(t.steps[0].x == 1);
  CHECK(t.bound == 6);
  CHECK(shrink::verify_trace(g, t).ok);
}

TEST_CASE("bound on K_k is C(k,2)") {
  for (int k = 3; k <= 7; ++k) {
    const auto t = shrink::run_procedure(complete_graph(k), k);
    CHECK(t.iterations() == 0);
    CHECK(t.bound == extremal::choose2(k));
  }
}

TEST_CASE("extremal graphs give tight bounds") {
  for (int k = 3; k <= 5; ++k)
    for (int n = k + 1; n <= 25; ++n)
      for (auto shape : {extremal::Shape::path, extremal::Shape::star}) {
        const Graph g = extremal::build_extremal(n, k, shape);
        for (auto policy : {Policy::lex, Policy::max_overlap}) {
          const auto t = shrink::run_procedure(g, k, policy);
          CHECK(t.bound == extremal::min_edges_kcover(n, k));
          CHECK(shrink::verify_trace(g, t).ok);
        }
      }
}

TEST_CASE("bound sandwiched on dense covered graphs") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 5 + trial % 10;
    Graph g = complete_graph(n);
    // Drop random edges while the cover survives.
    auto es = g.edges();
    std::shuffle(es.begin(), es.end(), rng);
    for (const auto& e : es) {
      g.remove_edge(e.u, e.v);
      if (!cover::holds(g, {3, 1}) || !is_connected(g)) g.add_edge(e.u, e.v);
    }
    for (auto policy : {Policy::lex, Policy::max_overlap}) {
      const auto t = shrink::run_procedure(g, 3, policy);
      CHECK(t.bound >= extremal::min_edges_kcover(n, 3));
      CHECK(t.bound <= static_cast<long long>(g.edge_count()));
      CHECK(shrink::verify_trace(g, t).ok);
    }
  }
}

TEST_CASE("preconditions") {
  CHECK(code_of([] { shrink::run_procedure(complete_graph(3), 4); }) == Errc::precondition_failed);
  Graph two(6);
  for (auto [u, v] : std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}}) two.add_edge(u, v);
  CHECK(code_of([&] { shrink::run_procedure(two, 3); }) == Errc::precondition_failed);
  Graph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  CHECK(code_of([&] { shrink::run_procedure(path, 3); }) == Errc::precondition_failed);
}

TEST_CASE("tampered traces are rejected") {
  const Graph g = extremal::build_extremal(11, 3, extremal::Shape::path);
  const auto good = shrink::run_procedure(g, 3);
  REQUIRE(shrink::verify_trace(g, good).ok);

  auto t = good;
  t.bound += 1;
  CHECK_FALSE(shrink::verify_trace(g, t).ok);

  t = good;
  t.steps[1].x = 2;
  auto check = shrink::verify_trace(g, t);
  CHECK_FALSE(check.ok);
  CHECK(check.step == 2);

  t = good;
  t.steps.pop_back();
  t.bound = shrink::bound_from_steps(3, t.steps);
  CHECK_FALSE(shrink::verify_trace(g, t).ok);

  t = good;
  std::swap(t.steps[0].frontier, t.steps[0].covered);
  CHECK_FALSE(shrink::verify_trace(g, t).ok);

  t = good;
  t.initial = {0, 1, 5};
  CHECK(shrink::verify_trace(g, t).step == 0);
}

TEST_CASE("both policies certify bounds on K7 with k = 4") {
  const Graph g = complete_graph(7);
  const auto a = shrink::run_procedure(g, 4, Policy::lex);
  const auto b = shrink::run_procedure(g, 4, Policy::max_overlap);
  CHECK(a.bound >= extremal::min_edges_kcover(7, 4));
  CHECK(b.bound >= extremal::min_edges_kcover(7, 4));
  CHECK(shrink::verify_trace(g, b).ok);
}
