#include <set>

#include "doctest.h"
#include "kcover/canon.hpp"
#include "kcover/cover.hpp"
#include "kcover/error.hpp"
#include "kcover/extremal.hpp"
#include "kcover/oracle.hpp"
#include "support/convert.hpp"

using namespace kcover;
using oracle::Condition;
using oracle::SearchSpec;

namespace {

SearchSpec spec(int n, int k, int l = 1) {
  SearchSpec s;
  s.n = n;
  s.k = k;
  s.l = l;
  return s;
}

std::set<std::string> reference_minimizer_forms(const naive::MinResult& r) {
  std::set<std::string> out;
  for (const auto& [key, m] : r.minimizers) out.insert(canonical_form(support::to_graph(m)));
  return out;
}

std::set<std::string> forms(const std::vector<Graph>& gs) {
  std::set<std::string> out;
  for (const auto& g : gs) out.insert(canonical_form(g));
  return out;
}

}  // namespace

TEST_CASE("frozen minima") {
  CHECK(oracle::min_edges_bruteforce(spec(4, 3)).minimum == 5);
  CHECK(oracle::min_edges_bruteforce(spec(5, 3, 2)).minimum == 9);
  CHECK(oracle::min_edges_bruteforce(spec(7, 3)).minimum == 9);
  CHECK(oracle::min_edges_bruteforce(spec(3, 3, 2)).minimum == std::nullopt);
}

TEST_CASE("edge-cover minima and minimizers match exhaustive reference") {
  for (int n = 3; n <= 6; ++n)
    for (int k = 3; k <= n; ++k)
      for (int l = 1; l <= 2; ++l) {
        CAPTURE(n);
        CAPTURE(k);
        CAPTURE(l);
        const auto ref = naive::minimum(n, [&](const naive::Mat& m) {
          return m.edge_count() > 0 && naive::connected(m) && naive::cover(m, k, l);
        });
        const auto rep = oracle::min_edges_bruteforce(spec(n, k, l));
        if (ref.minimum < 0) {
          CHECK_FALSE(rep.minimum.has_value());
          continue;
        }
        REQUIRE(rep.minimum.has_value());
        CHECK(*rep.minimum == ref.minimum);
        std::set<std::string> got;
        for (const auto& m : rep.minimizers) got.insert(m.canonical);
        CHECK(got == reference_minimizer_forms(ref));
      }
}

TEST_CASE("vertex variant matches exhaustive reference") {
  for (int k = 2; k <= 4; ++k)
    for (int n = k; n <= 6; ++n) {
      SearchSpec s = spec(n, k);
      s.condition = Condition::vertex_cover;
      s.require_connected = false;
      const auto ref = naive::minimum(n, [&](const naive::Mat& m) { return naive::vertex_cover(m, k); });
      CHECK(oracle::min_edges_bruteforce(s).minimum == ref.minimum);
      CHECK(ref.minimum == extremal::min_edges_vertex_kcover(n, k));
    }
}

TEST_CASE("component count matches exhaustive reference") {
  for (int c = 2; c <= 3; ++c)
    for (int n = 2 + c; n <= 6; ++n) {
      SearchSpec s = spec(n, 3);
      s.component_count = c;
      const auto ref = naive::minimum(n, [&](const naive::Mat& m) {
        return naive::component_count(m) == c && naive::cover(m, 3, 1);
      });
      CHECK(oracle::min_edges_bruteforce(s).minimum == ref.minimum);
      CHECK(ref.minimum == extremal::min_edges_components(n, 3, c));
    }
}

TEST_CASE("parallel search agrees with serial") {
  for (int workers : {1, 2, 4}) {
    const auto rep = oracle::min_edges_bruteforce(spec(7, 3, 2), {true, static_cast<unsigned>(workers)});
    CHECK(rep.minimum == 12);
    CHECK(rep.minimizers.size() == 1);
  }
}

TEST_CASE("connected graph counts") {
  // Connected graphs on 1..8 vertices up to isomorphism.
  const std::size_t expected[] = {1, 1, 2, 6, 21, 112, 853, 11117};
  for (int n = 1; n <= 8; ++n) CHECK(oracle::enumerate_connected(n).size() == expected[n - 1]);
  for (int n = 1; n <= 6; ++n) {
    std::set<std::string> ref;
    for (const auto& [key, m] : naive::classes(n))
      if (naive::connected(m)) ref.insert(canonical_form(support::to_graph(m)));
    CHECK(forms(oracle::enumerate_connected(n)) == ref);
  }
}

TEST_CASE("size caps") {
  for (auto f : {+[] { oracle::min_edges_bruteforce(spec(9, 3)); }, +[] { oracle::enumerate_connected(9); }}) {
    try {
      f();
      FAIL("expected cap_exceeded");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::cap_exceeded);
    }
  }
  SearchSpec bad = spec(5, 3, 2);
  bad.condition = Condition::vertex_cover;
  CHECK_THROWS_AS(oracle::min_edges_bruteforce(bad), Error);
}

TEST_CASE("satisfies checks every constraint") {
  CHECK(oracle::satisfies(complete_graph(4), spec(4, 3, 2)));
  CHECK_FALSE(oracle::satisfies(complete_graph(4), spec(4, 3, 3)));
  SearchSpec two = spec(6, 3);
  two.component_count = 2;
  Graph g(6);
  for (auto [u, v] : std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}}) g.add_edge(u, v);
  CHECK(oracle::satisfies(g, two));
  CHECK_FALSE(oracle::satisfies(g, spec(6, 3)));
  CHECK(oracle::search_lower_bound(spec(8, 3)) >= 7);
}
